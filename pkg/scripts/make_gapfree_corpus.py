"""Write every gap-free graph on N vertices (up to isomorphism) as graph6.

Gap-freeness is inherited by induced subgraphs, so extending the gap-free
classes on N-1 vertices by one vertex reaches every gap-free class on N.

    python scripts/make_gapfree_corpus.py 8 data/gapfree_n8.g6
"""

import argparse
import logging

from pathreg.corpus import MAX_BUILTIN_N, extend_classes, generate_all_graphs, write_graph6_file
from pathreg.props import is_gap_free

log = logging.getLogger("make_gapfree_corpus")


def gap_free_classes(n: int):
    base = min(n, MAX_BUILTIN_N)
    graphs = [g for g in generate_all_graphs(base) if is_gap_free(g)]
    for k in range(base + 1, n + 1):
        graphs = extend_classes(graphs, is_gap_free)
        log.info("n=%d: %d gap-free classes", k, len(graphs))
    return graphs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("output")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    count = write_graph6_file(args.output, gap_free_classes(args.n))
    log.info("wrote %d graphs to %s", count, args.output)


if __name__ == "__main__":
    main()
