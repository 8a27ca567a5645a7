#!/usr/bin/env python3
"""Regenerate the miniature WNdb-format noun database under data/wordnet_mini.

The synset inventory covers the insurance vocabulary used by the tests and
the demo corpus.  Offsets are arbitrary but unique; the file layout follows
the WNdb-3.0 dictionary format (index.noun / data.noun).
"""

from collections import defaultdict
from pathlib import Path

SYNSETS = [
    (1740, ["person", "individual", "someone", "somebody", "mortal", "soul"],
     "a human being"),
    (2137, ["policy"], "a plan of action adopted by an organization"),
    (2254, ["insurance", "insurance_policy", "policy"],
     "written contract or certificate of insurance"),
    (2381, ["insurance"],
     "promise of reimbursement in the case of loss"),
    (2490, ["premium", "insurance_premium"],
     "payment for insurance"),
    (2599, ["premium"], "a fee charged in addition to the usual amount"),
    (2708, ["vehicle"], "a conveyance that transports people or objects"),
    (2817, ["vehicle", "fomite"],
     "any inanimate object that can transmit infectious agents"),
    (2926, ["incident"], "a single distinct event"),
    (3035, ["incident"], "a public disturbance"),
    (3144, ["excess", "surplus", "surplusage", "nimiety"],
     "a quantity much larger than is needed"),
    (3253, ["overindulgence", "excess"], "excessive indulgence"),
    (3362, ["claim"], "an assertion of a right to money or property"),
    (3471, ["car", "auto", "automobile", "machine", "motorcar"],
     "a motor vehicle with four wheels"),
    (3580, ["accident", "fortuity", "chance_event"],
     "anything that happens suddenly by chance without apparent cause"),
    (3689, ["damage", "harm", "impairment"],
     "the occurrence of a change for the worse"),
    (3798, ["cost", "price", "toll"], "value measured by what must be given"),
    (3907, ["payment", "defrayal", "defrayment"],
     "the act of paying money"),
    (4016, ["hazard", "jeopardy", "peril", "risk", "endangerment"],
     "a source of danger"),
    (4125, ["larceny", "theft", "thievery", "thieving", "stealing"],
     "the act of taking something from someone unlawfully"),
    (4234, ["contract"], "a binding agreement that is enforceable by law"),
    (4343, ["motor"], "machine that converts other forms of energy into motion"),
    (4452, ["company"], "an institution created to conduct business"),
    (4561, ["driver"], "the operator of a motor vehicle"),
    (4670, ["automobile_insurance", "car_insurance"],
     "insurance against loss due to theft or traffic accidents"),
    (4779, ["deductible"],
     "amount the insured must pay before the insurer pays the remainder"),
]

HEADER = (
    "  1 Miniature noun database fixture for the test suite.\n"
    "  2 The file layout follows the WNdb-3.0 dictionary format.\n"
)


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "data" / "wordnet_mini"
    out_dir.mkdir(parents=True, exist_ok=True)

    data_lines = []
    lemma_offsets = defaultdict(list)
    for offset, words, gloss in SYNSETS:
        w_cnt = f"{len(words):02x}"
        word_part = " ".join(f"{w} 0" for w in words)
        ptr_target = 2708 if offset == 1740 else 1740
        data_lines.append(
            f"{offset:08d} 21 n {w_cnt} {word_part} 001 @ {ptr_target:08d} n 0000 | {gloss}  "
        )
        for word in words:
            lemma_offsets[word].append(offset)

    index_lines = []
    for lemma in sorted(lemma_offsets):
        offsets = lemma_offsets[lemma]
        cnt = len(offsets)
        offs = " ".join(f"{o:08d}" for o in offsets)
        index_lines.append(f"{lemma} n {cnt} 1 @ {cnt} 0 {offs}  ")

    (out_dir / "data.noun").write_text(HEADER + "\n".join(data_lines) + "\n", encoding="utf-8")
    (out_dir / "index.noun").write_text(HEADER + "\n".join(index_lines) + "\n", encoding="utf-8")
    print(f"wrote {len(SYNSETS)} synsets, {len(lemma_offsets)} index entries -> {out_dir}")


if __name__ == "__main__":
    main()
