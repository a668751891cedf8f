"""Independent count of k-labeled loopless multigraphs up to label-preserving
isomorphism. Enumerates every multiplicity assignment on every node count and
canonicalizes by trying all permutations of the unlabeled nodes. The counts it
prints are frozen into tests/unit/test_catalog.cpp."""
import itertools
import sys


def count(k, max_nodes, max_edges, max_mult):
    total = 0
    for n in range(k, max_nodes + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        perms = list(itertools.permutations(range(k, n)))
        for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
            if sum(mults) > max_edges:
                continue
            best = None
            for p in perms:
                relabel = list(range(k)) + list(p)
                key = tuple(sorted((min(relabel[a], relabel[b]), max(relabel[a], relabel[b]), m)
                                   for (a, b), m in zip(pairs, mults) if m))
                if best is None or key < best:
                    best = key
            seen.add(best)
        total += len(seen)
    return total


if __name__ == "__main__":
    for args in [(1, 2, 1, 1), (0, 1, 0, 1), (0, 5, 10, 1), (1, 4, 6, 1), (1, 3, 3, 2), (2, 4, 4, 2), (0, 4, 5, 2)]:
        print(args, count(*args))
        sys.stdout.flush()
