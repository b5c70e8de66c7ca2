"""How an n-gram model scores a line against a meaning-preserving variant.

Trains on half of the bundled demo corpus, then compares the idiomatic
``i < length`` loop header with its mirrored form, with and without the
file cache. Run with ``python demos/02_language_model.py``.
"""

from pathlib import Path

from natpref import lm

CORPUS = Path(__file__).parent / "corpus"


def mean_bits(model, context, line, lambda_cache=None):
    stream = model.stream_source(context + line)
    n = len(model.stream_source(line))
    if lambda_cache is None:
        scores = model.score_stream(stream)
    else:
        scores = lm.score_with_cache(model, stream, lambda_cache)
    return sum(scores[-n:]) / n


def main():
    projects = sorted(p for p in CORPUS.iterdir() if p.is_dir())
    train = [f.read_text() for p in projects[:2] for f in sorted(p.rglob("*.java"))]
    model = lm.train(train, order=6)
    print(f"trained on {len(train)} files, {model.n_tokens()} tokens, vocabulary {len(model.vocab)}")

    context = "class T {\n    void f(int[] data, int length) {\n"
    for line in ("        for (int i = 0; i < length; i++) {", "        for (int i = 0; length > i; i++) {"):
        print(f"{mean_bits(model, context, line):6.2f} bits/token  {line.strip()}")

    # the cache rewards whatever the current file has already said
    repeated = "        weight = weight * decay + bias;\n"
    for k in (1, 5, 20):
        plain = mean_bits(model, context + repeated * (k - 1), repeated)
        cached = mean_bits(model, context + repeated * (k - 1), repeated, lambda_cache=0.5)
        print(f"occurrence {k:2d}: global {plain:5.2f}  cache {cached:5.2f} bits/token")


if __name__ == "__main__":
    main()
