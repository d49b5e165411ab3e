"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the two hot paths (feature hashing over documents, subword SGD
training) with both backends on the bundled mini corpus and prints timing
plus speedup. Usage:

    python benchmarks/bench_kernels.py [--repeat 3] [--expand 10]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

import ballotstance._kernels as kernels_pkg
from ballotstance._kernels import get_backend
from ballotstance.corpus import load_corpus
from ballotstance.hashing import featurize_matrix
from ballotstance.subword import SubwordConfig, train_subword

REPO_ROOT = Path(__file__).resolve().parent.parent
KERNEL_FUNCTIONS = (
    "murmur32",
    "hashed_counts",
    "char_ngram_ids",
    "subword_train_epoch",
    "subword_scores",
)


def set_backend(name: str) -> None:
    module = get_backend(name)
    for function in KERNEL_FUNCTIONS:
        setattr(kernels_pkg, function, getattr(module, function))


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best-of)")
    parser.add_argument("--expand", type=int, default=10, help="mini-corpus duplication factor")
    args = parser.parse_args()

    examples = load_corpus(REPO_ROOT / "data" / "mini_corpus" / "mini_corpus.jsonl").examples
    examples = examples * args.expand
    pairs = [(e.question, e.comment) for e in examples]
    config = SubwordConfig(embedding_dim=64, bucket_size=2**15, epochs=2, seed=1)

    print(f"documents: {len(pairs)}   subword config: dim=64 bucket=2^15 epochs=2")
    print(f"{'task':<28}{'python':>12}{'cython':>12}{'speedup':>10}")
    results: dict[str, dict[str, float]] = {"hashing": {}, "subword training": {}}
    for backend in ("python", "cython"):
        try:
            set_backend(backend)
        except ImportError:
            print(f"backend {backend} unavailable; skipping")
            continue
        results["hashing"][backend] = time_call(
            lambda: featurize_matrix(pairs, 2**20), args.repeat
        )
        results["subword training"][backend] = time_call(
            lambda: train_subword(examples, config=config), max(1, args.repeat - 1)
        )
    for task, timings in results.items():
        if len(timings) < 2:
            continue
        speedup = timings["python"] / timings["cython"]
        print(
            f"{task:<28}{timings['python']:>10.3f}s{timings['cython']:>10.3f}s{speedup:>9.1f}x"
        )
    set_backend("cython" if "cython" in results["hashing"] else "python")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
