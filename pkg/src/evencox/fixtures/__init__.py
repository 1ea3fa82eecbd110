"""Coxeter systems shipped with the package as ``.cox`` files."""
from importlib import resources

NAMES = ("sysa", "sysb", "sysc", "sysd", "syse", "sysf", "i2_6", "hollow")

# Even systems whose nerve is a flag triangulation of the 3-sphere.
FLAG_S3 = ("sysd", "syse", "sysf")


def text(name: str) -> str:
    return resources.files(__name__).joinpath(f"{name}.cox").read_text(encoding="utf-8")


def load(name: str):
    from ..coxeter import CoxeterGroup

    return CoxeterGroup.from_text(text(name))
