"""Cross-check every analysis against brute force on a random corpus."""
import argparse
import time
from collections import Counter

import numpy as np

from bapsens.assignment_sensitivity import assignment_sensitivity
from bapsens.corpus import CorpusConfig, corpus
from bapsens.edge_sensitivity import edge_sensitivity
from bapsens.intervals import corner_perturbation, rho, sample_uniform
from bapsens.lex_assignment import lexicographic_assignment
from bapsens.oracle import (
    brute_bap,
    brute_is_allowable,
    brute_is_edge_allowable,
    brute_lex_assignment,
    closed_form_uniform_radius,
    verify_exclusive_coverage,
)
from bapsens.solver import solve_bap


def trials(L, rng, shape, samples):
    out = [sample_uniform(L, rng) for _ in range(samples)]
    for e in np.ndindex(shape):
        out += [corner_perturbation(L, e), corner_perturbation(L, e, mirror=True)]
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=CorpusConfig.count)
    p.add_argument("--max-size", type=int, default=CorpusConfig.max_size)
    p.add_argument("--seed", type=int, default=CorpusConfig.seed)
    p.add_argument("--samples", type=int, default=20)
    args = p.parse_args()
    cfg = CorpusConfig(count=args.count, max_size=args.max_size, seed=args.seed)
    rng = np.random.default_rng(args.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for w in corpus(cfg):
        tally["instances"] += 1
        tally["value mismatch"] += solve_bap(w).bottleneck_value != brute_bap(w)[0]
        lex = lexicographic_assignment(w).assignment
        tally["lex mismatch"] += lex != brute_lex_assignment(w)
        er = edge_sensitivity(w)
        tally["edge certified"] += er.certified
        tally["coverage failures"] += not verify_exclusive_coverage(w, er.anchor, er.exclusive_set.members)
        if er.certified:
            tally["edge allowability failures"] += any(
                not brute_is_edge_allowable(w, er.anchor, P)
                for P in trials(er.intervals, rng, w.shape, args.samples))
        for strict in (True, False):
            r = assignment_sensitivity(w, lex, strict_ties=strict)
            tally[f"assignment certified ({'strict' if strict else 'relaxed'})"] += r.certified
        r = assignment_sensitivity(w, lex)
        for e, S in r.exclusive_sets.items():
            tally["coverage failures"] += not verify_exclusive_coverage(w, e, S)
        if r.certified:
            tally["assignment allowability failures"] += any(
                not brute_is_allowable(w, lex, P)
                for P in trials(r.intervals, rng, w.shape, args.samples))
        tally["radius mismatch"] += rho(r.intervals, 1) != closed_form_uniform_radius(w, lex)
    for k, v in tally.items():
        print(f"{k:40s} {v}")
    print(f"{'seconds':40s} {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
