#!/usr/bin/env python3
"""Regenerate the bundled insurance mini-corpus under data/mini_corpus.

Six documents of templated insurance prose, about 90,000 characters in
total (the corpus-budget threshold).  Generation is fully deterministic:
fixed template and vocabulary rotation, no randomness, so the corpus and
everything learned from it are reproducible byte for byte.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ontoforge import ingest  # noqa: E402

TARGET_DOC_CHARS = 14_820

SUBJECTS = [
    "premium", "policy", "insurance policy", "claim", "vehicle", "excess",
    "risk", "damage", "payment", "contract", "driver", "accident",
    "deductible", "insurance company", "policy holder", "claim form",
    "motor insurance", "insurance premium", "coverage", "renewal notice",
    "incident report", "theft", "liability", "inspection", "settlement",
]

OBJECTS = [
    "premium", "cost", "policy", "claim", "payment", "excess", "risk",
    "vehicle value", "damage assessment", "contract term", "renewal date",
    "insurance certificate", "claim amount", "policy document",
    "coverage limit", "market value", "repair cost", "settlement offer",
    "premium payment", "deductible amount",
]

TEMPLATES = [
    "The {s} covers the {o}.",
    "A higher {s} raises the {o}.",
    "The {s} affects the {o}.",
    "The {s} can reduce the {o}.",
    "The {s} must include the {o}.",
    "The {s} is assessed by the {o}.",
    "The {s} is reviewed by the {o}.",
    "The {s} rises.",
    "The {s} falls.",
    "The {s} is important.",
    "The {s} is optional.",
    "The {s} determines the {o}.",
    "The {s} requires a {o}.",
    "Every {s} depends on the {o}.",
    "The insurer calculates the {s} from the {o}.",
    "The company providing the {s} checks the {o}.",
    "An agent reviewing the {s} records the {o}.",
    "The {s} protects the {o}.",
    "The annual {s} includes the {o}.",
    "The {s} can affect the {o}.",
]

SUBCLASS_FACTS = [
    "A premium is a payment.",
    "A deductible is an excess.",
    "An accident is an incident.",
    "A theft is an incident.",
    "Motor insurance is an insurance policy.",
    "A policy is a contract.",
    "A driver is a person.",
    "An insurer is a company.",
]

LEADS = {
    "motor-insurance": (
        "Motor insurance explained.\n"
        "If you raise the IDV, the premium rises. "
        "IDV can make a whole lot of difference to the motor insurance premium. "
        "The insured declared value is the market value of the vehicle. "
        "A careful driver pays a lower motor insurance premium."
    ),
    "home-insurance": (
        "Home insurance basics.\n"
        "Home insurance covers the building and the contents. "
        "The policy holder declares the property value at renewal. "
        "Fire damage and theft are covered by the standard policy."
    ),
    "health-insurance": (
        "Health insurance overview.\n"
        "Health insurance covers the medical cost of treatment. "
        "The insurer can exclude a condition from the coverage. "
        "A person choosing a plan compares the premium and the deductible."
    ),
    "claims-handling": (
        "Claims handling procedure.\n"
        "The policy holder submits a claim form after an incident. "
        "The claim is assessed by the insurance company. "
        "An assessor inspecting the damage records the repair cost."
    ),
    "policy-terms": (
        "Policy terms and conditions.\n"
        "The insurance policy is a contract between the insurer and the policy holder. "
        "The contract defines the coverage, the excess and the premium payment. "
        "A renewal notice states the new premium."
    ),
    "risk-assessment": (
        "Risk assessment notes.\n"
        "The insurer measures the risk before setting the premium. "
        "A high risk raises the insurance premium. "
        "The risk depends on the driver, the vehicle and the location."
    ),
}


def build_document(name: str, seed: int) -> str:
    parts = [LEADS[name]]
    length = len(LEADS[name])
    i = seed
    while length < TARGET_DOC_CHARS:
        sentences = []
        for j in range(5):
            k = i * 5 + j
            template = TEMPLATES[k % len(TEMPLATES)]
            subject = SUBJECTS[(k * 7 + seed) % len(SUBJECTS)]
            obj = OBJECTS[(k * 11 + 3 * seed) % len(OBJECTS)]
            sentences.append(template.format(s=subject, o=obj))
        if i % 4 == seed % 4:
            sentences.append(SUBCLASS_FACTS[i % len(SUBCLASS_FACTS)])
        paragraph = " ".join(sentences)
        parts.append(paragraph)
        length += len(paragraph) + 1
        i += 1
    return "\n".join(parts) + "\n"


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "data" / "mini_corpus"
    corpus = ingest.Corpus()
    for seed, name in enumerate(sorted(LEADS)):
        text = build_document(name, seed)
        corpus = ingest.add_document(corpus, text, name, source_id=f"generated:{name}")
    ingest.save_corpus(corpus, out_dir)
    report = ingest.corpus_budget_check(corpus)
    print(
        f"wrote {len(corpus.documents)} documents, {report.total_chars} chars "
        f"({'within' if report.within_budget else 'OVER'} the {report.max_chars} budget), "
        f"{corpus.total_tokens} tokens -> {out_dir}"
    )


if __name__ == "__main__":
    main()
