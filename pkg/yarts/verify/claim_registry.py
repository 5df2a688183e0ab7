"""Make sure all claims are registered."""


def register_all_claims():
    """Make sure all claims are registered."""
    from . import (  # noqa: F401
        suite_q2n5_lst,
        suite_q3n3,
        suite_q3n4_gd,
        suite_q3n5,
        suite_q5n3,
        suite_q5n5_candidates,
        suite_q7_dab,
    )
