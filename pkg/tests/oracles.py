"""Brute-force reference implementations used to cross-check the engines.

Everything here trades efficiency for obviousness: subsets are enumerated
outright and definitions are transcribed literally, so a disagreement with
the real implementations points at a bug in the latter.
"""

from itertools import chain, combinations

from argeo import (
    Framework,
    complementary_pairs,
    forward_closure,
    is_directly_consistent,
)


def powerset(items):
    pool = list(items)
    return chain.from_iterable(combinations(pool, k) for k in range(len(pool) + 1))


def naive_delp_arguments(program):
    """All (support, conclusion) pairs by literal subset enumeration:
    minimal defeasible-rule sets whose derivable literals are consistent."""
    strict = list(program.strict_rules)
    out = set()
    for subset in powerset(program.defeasible_rules):
        rules = frozenset(subset)
        derivable = forward_closure(program.facts, strict + list(rules))
        if not is_directly_consistent(derivable):
            continue
        for conclusion in derivable:
            smaller_works = any(
                conclusion in forward_closure(
                    program.facts, strict + list(rules - {dropped}))
                for dropped in rules
            )
            if not smaller_works:
                out.add((frozenset(r.id for r in rules), conclusion))
    return out


def _conflict_free(framework, pool):
    return not any(s in pool and t in pool for s, t in framework.defeats)


def _defended(framework, pool, argument):
    return all(
        any((d, attacker) in framework.defeats for d in pool)
        for attacker in framework.arguments
        if (attacker, argument) in framework.defeats
    )


def naive_complete(framework: Framework):
    out = []
    for subset in powerset(framework.arguments):
        pool = set(subset)
        if not _conflict_free(framework, pool):
            continue
        defended = {a for a in framework.arguments if _defended(framework, pool, a)}
        if defended == pool:
            out.append(frozenset(pool))
    return frozenset(out)


def naive_grounded(framework: Framework):
    complete = naive_complete(framework)
    return min(complete, key=len) if complete else frozenset()


def naive_preferred(framework: Framework):
    complete = naive_complete(framework)
    return frozenset(p for p in complete if not any(p < q for q in complete))


def naive_stable(framework: Framework):
    universe = set(framework.arguments)
    out = []
    for pool in naive_complete(framework):
        defeated = {t for s, t in framework.defeats if s in pool}
        if defeated == universe - pool:
            out.append(pool)
    return frozenset(out)


def accepted_conclusions_consistent(conclusions):
    return not complementary_pairs(conclusions)
