"""Shipped example portrait documents."""

from importlib.resources import files


def path(name: str):
    """Filesystem path of a shipped document, e.g. ``path("cubic_fatou_2cycle.json")``."""
    return files(__name__) / name


def names() -> list[str]:
    return sorted(p.name for p in files(__name__).iterdir() if p.name.endswith(".json"))
