"""Exact conductors of Artin-Schreier characters over two-dimensional local fields."""
from .finite_field import FieldError, FqElem, FqSpec, fq_make
from .field import FieldDesc, FieldElem, ParseError, elem_parse, format_elem, make_field
from .artin_schreier import ASCharacter, Classification, as_reduce, classify, same_class
from .conductor import char_form, conductor_report, swan, total_dim
from .base_change import ExtensionDesc, descend, transport

__all__ = [
    "ASCharacter",
    "Classification",
    "ExtensionDesc",
    "FieldDesc",
    "FieldElem",
    "FieldError",
    "FqElem",
    "FqSpec",
    "ParseError",
    "as_reduce",
    "char_form",
    "classify",
    "conductor_report",
    "descend",
    "elem_parse",
    "format_elem",
    "fq_make",
    "make_field",
    "same_class",
    "swan",
    "total_dim",
    "transport",
]
