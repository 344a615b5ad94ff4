"""Bundled example quivers."""

from importlib import resources

NAMES = ("prototype", "two_cycle", "two_cycle_square", "two_loop", "two_loop_dual", "qstar")


def path(name: str):
    return resources.files(__name__).joinpath(f"{name}.gq")


def text(name: str) -> str:
    return path(name).read_text(encoding="utf-8")
