"""Small helpers shared by the enumerator tests."""

from core.models import Graph
from services.oracle_service import enumerate_all


def texts(functions) -> list[str]:
    return [f.text for f in functions]


def oracle_set(g: Graph) -> set[str]:
    return {f.text for f in enumerate_all(g)}
