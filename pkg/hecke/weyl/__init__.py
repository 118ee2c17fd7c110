from hecke.weyl.cosets import (
    coset_factorize,
    min_coset_reps,
    stabilizer,
    stabilizer_subset,
    verify_coset_bruhat_lemma,
)
from hecke.weyl.group import WeylElement, WeylGroup, generate_group


def bruhat_leq(group: WeylGroup, w: WeylElement, v: WeylElement) -> bool:
    return group.bruhat_leq(w, v)


__all__ = [
    "WeylElement",
    "WeylGroup",
    "bruhat_leq",
    "coset_factorize",
    "generate_group",
    "min_coset_reps",
    "stabilizer",
    "stabilizer_subset",
    "verify_coset_bruhat_lemma",
]
