"""Hypothesis strategies for small random ontologies (pivot-valid shapes)."""

from hypothesis import strategies as st

from ontoforge.owl_ingest import ClassDecl, OwlDocument
from ontoforge.pivot_model import PivotOntology, to_pivot


@st.composite
def small_ontologies(draw) -> PivotOntology:
    count = draw(st.integers(min_value=1, max_value=4))
    names = [f"C{i}" for i in range(count)]

    ordered_pairs = [(a, b) for a in names for b in names if a != b]
    is_a = draw(
        st.lists(st.sampled_from(ordered_pairs), unique=True, max_size=4)
    ) if ordered_pairs else []
    equiv = draw(
        st.lists(st.sampled_from(ordered_pairs), unique=True, max_size=2)
    ) if ordered_pairs else []

    unions: list[tuple[str, list[str]]] = []
    if count >= 3 and draw(st.booleans()):
        target = draw(st.sampled_from(names))
        member_pool = [n for n in names if n != target]
        size = draw(st.integers(min_value=2, max_value=min(3, len(member_pool))))
        members = draw(
            st.lists(st.sampled_from(member_pool), unique=True, min_size=size, max_size=size)
        )
        unions.append((target, members))

    instance_count = draw(st.integers(min_value=0, max_value=3))
    assignments = [
        (f"i{k}", draw(st.sampled_from(names))) for k in range(instance_count)
    ]

    decls = []
    for name in names:
        decls.append(
            ClassDecl(
                id=name,
                super_refs=[p for c, p in is_a if c == name],
                equivalent_refs=[b for a, b in equiv if a == name],
                union_members=next((m for t, m in unions if t == name), None),
                individuals=[i for i, cls in assignments if cls == name],
            )
        )
    pivot = to_pivot(OwlDocument(classes=decls))
    assert isinstance(pivot, PivotOntology)
    return pivot
