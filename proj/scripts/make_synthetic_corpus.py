#!/usr/bin/env python3
"""Generates resources/corpus/synthetic.tsv.

Every word has exactly one tag, so the tagging problem is separable. The
output is committed; rerunning reproduces it byte for byte.
"""
import random
import sys

LEXICON = {
    "N": ["mard", "zan", "šah", "dēn", "xwadāy", "asp", "gāw", "tan", "gyān", "xrad", "rōz", "šab", "kār", "ātaxš"],
    "V": ["kard", "dād", "būd", "raft", "guft", "dīd", "āmad", "zad", "kunēd", "gōwēd"],
    "ADJ": ["wuzurg", "kōdak", "nēk", "wad", "weh", "xūb"],
    "DET": ["ān", "ēn"],
    "PRON": ["man", "tō", "ōy", "amā"],
    "ADV": ["nūn", "ēdōn", "abāz", "hamē"],
    "PREP": ["az", "pad", "ō", "andar"],
    "POST": ["rāy"],
    "CONJ": ["ud", "bē"],
    "NUM": ["ēk", "dō", "sē"],
    "EZ": ["ī"],
}
LEMMAS = {"kunēd": "kun", "gōwēd": "gōw"}
TEMPLATES = [
    "DET N V",
    "PRON N V",
    "N EZ ADJ V",
    "PREP DET N V",
    "PRON ADV V",
    "NUM N V",
    "N CONJ N V",
    "N POST V",
    "DET N EZ ADJ ADV V",
    "PRON PREP N V CONJ V",
]


def main(n_sentences=50, seed=7):
    rng = random.Random(seed)
    out = ["#doc synthetic-1"]
    for i in range(n_sentences):
        if i == n_sentences // 2:
            out.append("#doc synthetic-2")
        template = TEMPLATES[i % len(TEMPLATES)] if i < len(TEMPLATES) else rng.choice(TEMPLATES)
        for tag in template.split():
            word = rng.choice(LEXICON[tag])
            out.append(f"{word}\t{LEMMAS.get(word, word)}\t{tag}\t_")
        out.append("")
    sys.stdout.write("\n".join(out))


if __name__ == "__main__":
    main()
