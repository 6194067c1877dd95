"""Fifty malformed or unsupported inputs with the diagnostic code each must produce."""

from ontoforge import diagnostics as dc

# (case name, document source, expected diagnostic code)
CASES: list[tuple[str, bytes | str, str]] = [
    # Malformed XML
    ("unclosed_tag", "<Ontology><Class ID='A'>", dc.MALFORMED_XML),
    ("mismatched_close", "<Ontology><Class ID='A'></Ontology></Class>", dc.MALFORMED_XML),
    ("bare_text", "just some text", dc.MALFORMED_XML),
    ("empty_input", "", dc.MALFORMED_XML),
    ("stray_angle", "<Ontology>< </Ontology>", dc.MALFORMED_XML),
    ("bad_attr", "<Ontology><Class ID=A/></Ontology>", dc.MALFORMED_XML),
    ("two_roots", "<Ontology/><Ontology/>", dc.MALFORMED_XML),
    ("invalid_utf8", b"<Ontology>\xff\xfe</Ontology>", dc.MALFORMED_XML),
    ("unterminated_comment", "<Ontology><!-- oops </Ontology>", dc.MALFORMED_XML),
    ("undefined_entity", "<Ontology>&nope;</Ontology>", dc.MALFORMED_XML),
    # Root problems
    ("wrong_root", "<Zoo><Class ID='A'/></Zoo>", dc.UNEXPECTED_ROOT),
    ("class_as_root", "<Class ID='A'/>", dc.UNEXPECTED_ROOT),
    # Unsupported constructs
    ("intersection_of", "<Ontology><Class ID='A'><intersectionOf/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("complement_of", "<Ontology><Class ID='A'><complementOf resource='A'/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("restriction", "<Ontology><Class ID='A'><Restriction/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("object_property", "<Ontology><ObjectProperty ID='p'/></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("datatype_property", "<Ontology><DatatypeProperty ID='q'/></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("imports", "<Ontology><imports resource='http://x/y'/></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("subclass_no_resource", "<Ontology><Class ID='A'><subClassOf/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("equivalent_no_resource", "<Ontology><Class ID='A'><equivalentClass/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    (
        "union_wrong_parsetype",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf><Class about='A'/><Class about='B'/></unionOf></Class></Ontology>",
        dc.UNSUPPORTED_CONSTRUCT,
    ),
    (
        "union_non_class_child",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='B'/><Thingy/></unionOf></Class></Ontology>",
        dc.UNSUPPORTED_CONSTRUCT,
    ),
    ("nested_class", "<Ontology><Class ID='A'><Class ID='B'/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("label_element", "<Ontology><Class ID='A'><label>a label</label></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("comment_element", "<Ontology><Class ID='A'><comment>text</comment></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    ("prefixed_restriction", "<Ontology><Class ID='A'><owl:Restriction/></Class></Ontology>", dc.UNSUPPORTED_CONSTRUCT),
    (
        "union_inside_union",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='B'/><unionOf parseType='Collection'/></unionOf></Class></Ontology>",
        dc.UNSUPPORTED_CONSTRUCT,
    ),
    (
        "subclass_with_child",
        "<Ontology><Class ID='A'/><Class ID='B'><subClassOf resource='A'><Restriction/></subClassOf></Class></Ontology>",
        dc.UNSUPPORTED_CONSTRUCT,
    ),
    (
        "union_member_with_child",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'><subClassOf resource='B'/></Class><Class about='B'/></unionOf></Class></Ontology>",
        dc.UNSUPPORTED_CONSTRUCT,
    ),
    # Missing identifiers and untyped individuals
    ("class_no_id", "<Ontology><Class/></Ontology>", dc.MISSING_IDENTIFIER),
    ("nested_individual_no_id", "<Ontology><Class ID='A'><Individual/></Class></Ontology>", dc.MISSING_IDENTIFIER),
    ("top_individual_no_id", "<Ontology><Individual type='A'/><Class ID='A'/></Ontology>", dc.MISSING_IDENTIFIER),
    ("top_individual_untyped", "<Ontology><Class ID='A'/><Individual ID='i'/></Ontology>", dc.UNTYPED_INDIVIDUAL),
    ("thing_untyped", "<Ontology><Class ID='A'/><Thing ID='t'/></Ontology>", dc.UNTYPED_INDIVIDUAL),
    ("union_member_no_id", "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class/><Class about='A'/><Class about='B'/></unionOf></Class></Ontology>", dc.MISSING_IDENTIFIER),
    # Duplicates
    ("duplicate_class", "<Ontology><Class ID='A'/><Class ID='A'/></Ontology>", dc.DUPLICATE_CLASS),
    ("duplicate_class_via_about", "<Ontology><Class ID='A'/><Class about='A'/></Ontology>", dc.DUPLICATE_CLASS),
    ("duplicate_individual", "<Ontology><Class ID='A'><Individual ID='i'/><Individual ID='i'/></Class></Ontology>", dc.DUPLICATE_INDIVIDUAL),
    (
        "duplicate_union_member",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='A'/><Class about='B'/></unionOf></Class></Ontology>",
        dc.DUPLICATE_UNION_MEMBER,
    ),
    # Dangling references
    ("dangling_subclass", "<Ontology><Class ID='A'><subClassOf resource='Nope'/></Class></Ontology>", dc.DANGLING_REFERENCE),
    ("dangling_equivalent", "<Ontology><Class ID='A'><equivalentClass resource='Nope'/></Class></Ontology>", dc.DANGLING_REFERENCE),
    (
        "dangling_union_member",
        "<Ontology><Class ID='A'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='Nope'/></unionOf></Class></Ontology>",
        dc.DANGLING_REFERENCE,
    ),
    ("dangling_individual_type", "<Ontology><Class ID='A'/><Individual ID='i' type='Nope'/></Ontology>", dc.DANGLING_REFERENCE),
    # Union structure
    (
        "union_single_member",
        "<Ontology><Class ID='A'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/></unionOf></Class></Ontology>",
        dc.UNION_ARITY,
    ),
    ("union_empty", "<Ontology><Class ID='U'><unionOf parseType='Collection'/></Class></Ontology>", dc.UNION_ARITY),
    (
        "multiple_union",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='B'/></unionOf><unionOf parseType='Collection'><Class about='B'/><Class about='A'/></unionOf></Class></Ontology>",
        dc.MULTIPLE_UNION,
    ),
    # Pivot-level rejections and warnings
    ("sanitize_collision", "<Ontology><Class ID='A-1'/><Class ID='A_1'/></Ontology>", dc.IDENTIFIER_COLLISION),
    ("class_instance_collision", "<Ontology><Class ID='A'/><Class ID='B'><Individual ID='A'/></Class></Ontology>", dc.IDENTIFIER_COLLISION),
    (
        "self_union",
        "<Ontology><Class ID='A'/><Class ID='U'><unionOf parseType='Collection'><Class about='U'/><Class about='A'/></unionOf></Class></Ontology>",
        dc.SELF_REFERENTIAL_UNION,
    ),
    (
        "subsumption_cycle",
        "<Ontology><Class ID='A'><subClassOf resource='B'/></Class><Class ID='B'><subClassOf resource='A'/></Class></Ontology>",
        dc.CYCLE_IN_SUBSUMPTION,
    ),
    (
        "redundant_equiv_subclass",
        "<Ontology><Class ID='A'><subClassOf resource='B'/><equivalentClass resource='B'/></Class><Class ID='B'/></Ontology>",
        dc.REDUNDANT_EQUIV_SUBCLASS,
    ),
    (
        "union_target_directs",
        "<Ontology><Class ID='A'/><Class ID='B'/><Class ID='U'><unionOf parseType='Collection'><Class about='A'/><Class about='B'/></unionOf><Individual ID='u1'/></Class></Ontology>",
        dc.UNION_TARGET_DIRECT_INSTANCES,
    ),
]
