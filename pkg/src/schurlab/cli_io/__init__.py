"""Structured input/output and the command line driver."""
from .cli import main
from .documents import (FAIL, PASS, PROBED, SCHEMA, UNRESOLVED, atomic_write,
                        canonical_json, claim, exit_code_for, field_decl,
                        instance_digest, make_certificate, overall_status,
                        parse_field, parse_matrix, parse_symmetric,
                        parse_vector, render_text, ser_points, ser_vec)

__all__ = [
    "main",
    "SCHEMA", "PASS", "FAIL", "PROBED", "UNRESOLVED",
    "atomic_write", "canonical_json", "claim", "exit_code_for", "field_decl",
    "instance_digest", "make_certificate", "overall_status", "parse_field",
    "parse_matrix", "parse_symmetric", "parse_vector", "render_text",
    "ser_points", "ser_vec",
]
