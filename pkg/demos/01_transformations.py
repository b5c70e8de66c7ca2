"""Every transformation kind applied to one small method.

Run with ``python demos/01_transformations.py``.
"""

from natpref import transforms as tf
from natpref.frontend import parse_file

SOURCE = """\
class Demo {
    double mean(int[] values, int length) {
        int total = 0;
        int count = 0;
        for (int i = 0; i < length; i++) {
            total = total + values[i] * 2;
            count++;
        }
        if (count == 0 || (length > 100)) {
            return 0.0;
        }
        return (double) total / (count);
    }
}
"""


def main():
    parsed = parse_file(SOURCE, "Demo.java")
    for kind in tf.ALL_KINDS:
        records = tf.generate(parsed, [kind], seed=0)
        print(f"== {kind}: {len(records)} variant(s)")
        for rec in records[:3]:
            if kind in tf.SHUFFLE_KINDS:
                print(f"   renamed {rec.meta['renamed']} on lines {rec.meta['affected_lines']}")
            else:
                print(f"   line {rec.lines[0]}: {rec.original_text!r} -> {rec.transformed_text!r}")
                shared = sum(rec.shared_tokens.values())
                print(f"      {shared} shared token(s) will be scored")


if __name__ == "__main__":
    main()
