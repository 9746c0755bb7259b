"""Rewrite the golden files. Run only after an intentional output change:

    python tests/golden/regenerate.py
"""

import random
from pathlib import Path

from braidminors.braidword import Band, BandWord, format_braid
from braidminors.cli import main
from braidminors.surface import build_surface, render_svg
from braidminors.parser import parse_braid

HERE = Path(__file__).parent
FIG1 = "B7: b(4,7) b(3,5) b(2,4) b(1,3) b(2,6) b(5,7) b(1,6)"


def corpus(count=200, seed=2024):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, 10)
        length = 0 if n == 1 else rng.randint(0, 3 * n)
        letters = []
        for _ in range(length):
            if k % 2:
                i = rng.randint(1, n - 1)
                letters.append(Band(i, i + 1))
            else:
                i = rng.randint(1, n - 1)
                letters.append(Band(i, rng.randint(i + 1, n)))
        out.append(format_braid(BandWord(n, tuple(letters))))
    return out


if __name__ == "__main__":
    (HERE / "corpus_200.txt").write_text("\n".join(corpus()) + "\n", encoding="utf-8")
    (HERE / "fig1.svg").write_text(render_svg(build_surface(parse_braid(FIG1))), encoding="utf-8")
    main(["gen", "--n", "4", "--count", "50", "--min-len", "8", "--max-len", "20",
          "--seed", "42", "--out", str(HERE / "gen_seed42.txt")])
    main(["gen", "--n", "5", "--count", "20", "--min-len", "3", "--max-len", "12",
          "--seed", "42", "--bands", "--out", str(HERE / "gen_bands_seed42.txt")])
