"""Entry point: k -> base factors -> assembled and verified system."""

from __future__ import annotations

from arcs.base import ConstructionError, check_k
from arcs.lemma import ArcsSystem, LemmaAInput, assemble
from arcs.verify import VerificationReport, verify_arcs


def build_lemma_input(k: int) -> LemmaAInput:
    """Base factors for any supported k, dispatched on k mod 4."""
    check_k(k)
    if k % 4 == 1:
        from arcs.family1 import build_factors_mod1

        return build_factors_mod1(k)
    from arcs.family3 import build_factors_mod3

    return build_factors_mod3(k)


def case_label(k: int) -> str:
    check_k(k)
    if k % 4 == 1:
        from arcs.family1 import case_tag_mod1

        return case_tag_mod1(k).value
    from arcs.family3 import case_tag_mod3

    return case_tag_mod3(k).value


def build_system(k: int) -> ArcsSystem:
    """Assemble without running the independent verifier."""
    return assemble(build_lemma_input(k))


def generate(k: int) -> tuple[ArcsSystem, VerificationReport]:
    """Build the system for ``k`` and certify it; raise if certification fails."""
    system = build_system(k)
    report = verify_arcs(system)
    if not report.passed:
        failed = [f"{c.name}: {c.detail}" for c in report.checks if not c.passed]
        raise ConstructionError(f"k={k}: assembled system failed verification: " + "; ".join(failed))
    return system, report
