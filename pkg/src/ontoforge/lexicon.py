"""Built-in word lists for the rule-based tagger and lemmatizer.

The open-class table only needs entries where the default-NN fallback or a
suffix heuristic would guess wrong; everything else is left to the rules.
"""

# Closed classes: determiners, prepositions/subordinators, pronouns,
# conjunctions, modals (no modal tag in the tagset, so they map to OTHER),
# infinitival/prepositional "to".
CLOSED_CLASS = {
    # determiners
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "each": "DT", "every": "DT", "some": "DT",
    "any": "DT", "no": "DT", "all": "DT", "both": "DT", "another": "DT",
    "either": "DT", "neither": "DT", "such": "DT",
    # prepositions and subordinating conjunctions
    "in": "IN", "on": "IN", "at": "IN", "by": "IN", "for": "IN",
    "with": "IN", "from": "IN", "of": "IN", "about": "IN", "against": "IN",
    "between": "IN", "during": "IN", "without": "IN", "under": "IN",
    "over": "IN", "after": "IN", "before": "IN", "through": "IN",
    "since": "IN", "upon": "IN", "within": "IN", "per": "IN", "if": "IN",
    "because": "IN", "while": "IN", "although": "IN", "though": "IN",
    "whether": "IN", "as": "IN", "than": "IN", "into": "IN", "onto": "IN",
    "off": "IN", "above": "IN", "below": "IN", "near": "IN", "until": "IN",
    "toward": "IN", "towards": "IN", "via": "IN", "unless": "IN",
    "despite": "IN", "among": "IN", "across": "IN",
    # pronouns
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "her": "PRP",
    "us": "PRP", "them": "PRP", "myself": "PRP", "yourself": "PRP",
    "himself": "PRP", "herself": "PRP", "itself": "PRP", "ourselves": "PRP",
    "themselves": "PRP", "who": "PRP", "what": "PRP", "which": "PRP",
    "its": "PRP", "his": "PRP", "my": "PRP", "your": "PRP", "our": "PRP",
    "their": "PRP", "hers": "PRP", "ours": "PRP", "yours": "PRP",
    "theirs": "PRP", "mine": "PRP",
    # coordinating conjunctions
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    # "to"
    "to": "TO",
    # modals: the tagset has no modal tag, so they are deliberately OTHER
    # and rule files match them with literal-word constraints.
    "can": "OTHER", "could": "OTHER", "may": "OTHER", "might": "OTHER",
    "must": "OTHER", "shall": "OTHER", "should": "OTHER", "will": "OTHER",
    "would": "OTHER",
    # negation and frequent adverbs that no suffix rule catches
    "not": "RB", "n't": "RB", "also": "RB", "very": "RB", "too": "RB",
    "then": "RB", "there": "RB", "here": "RB", "now": "RB", "so": "RB",
    "well": "RB", "more": "RB", "most": "RB", "less": "RB", "often": "RB",
    "always": "RB", "never": "RB", "again": "RB", "up": "RB", "down": "RB",
    "out": "RB", "when": "RB", "where": "RB", "how": "RB", "why": "RB",
    "first": "RB", "instead": "RB", "however": "RB", "therefore": "RB",
}

# Open-class words shipped with the tagger.  Mostly verbs (the default tag
# is NN) plus nouns and adjectives where a suffix heuristic misfires.
OPEN_CLASS = {
    # be / have / do
    "be": "VB", "am": "VBP", "is": "VBZ", "are": "VBP", "was": "VBD",
    "were": "VBD", "been": "VBN", "being": "VBG",
    "have": "VB", "has": "VBZ", "had": "VBD", "having": "VBG",
    "do": "VB", "does": "VBZ", "did": "VBD", "done": "VBN", "doing": "VBG",
    # frequent base-form verbs
    "raise": "VB", "rise": "VB", "make": "VB", "take": "VB", "give": "VB",
    "get": "VB", "go": "VB", "see": "VB", "know": "VB", "become": "VB",
    "provide": "VB", "include": "VB", "require": "VB", "apply": "VB",
    "insure": "VB", "protect": "VB", "reduce": "VB", "affect": "VB",
    "depend": "VB", "happen": "VB", "occur": "VB", "involve": "VB",
    "ensure": "VB", "enable": "VB", "allow": "VB", "receive": "VB",
    "remain": "VB", "choose": "VB", "buy": "VB", "sell": "VB", "pay": "VB",
    "keep": "VB", "send": "VB", "find": "VB", "mean": "VB", "hold": "VB",
    "grow": "VB", "fall": "VB", "meet": "VB", "set": "VB", "put": "VB",
    "let": "VB", "begin": "VB", "come": "VB", "compare": "VB",
    "calculate": "VB", "determine": "VB", "exclude": "VB", "renew": "VB",
    "submit": "VB", "settle": "VB", "assess": "VB", "reimburse": "VB",
    "need": "VB", "agreed": "VBD", "created": "VBN",
    # irregular past forms that no suffix rule can reach
    "made": "VBD", "took": "VBD", "gave": "VBD", "got": "VBD",
    "went": "VBD", "rose": "VBD", "fell": "VBD", "paid": "VBD",
    "said": "VBD", "held": "VBD", "kept": "VBD", "sent": "VBD",
    "found": "VBD", "met": "VBD", "grew": "VBD", "became": "VBD",
    "chose": "VBD", "bought": "VBD", "sold": "VBD", "knew": "VBD",
    "saw": "VBD", "came": "VBD", "began": "VBD",
    # nouns that end like verb or adverb suffixes
    "thing": "NN", "nothing": "NN", "something": "NN", "anything": "NN",
    "everything": "NN", "morning": "NN", "evening": "NN", "building": "NN",
    "meaning": "NN", "family": "NN", "supply": "NN", "assembly": "NN",
    "proceedings": "NNS", "savings": "NNS", "earnings": "NNS",
    "news": "NN", "business": "NN", "loss": "NN", "process": "NN",
    "basis": "NN", "analysis": "NN", "status": "NN", "bonus": "NN",
    "surplus": "NN", "excess": "NN",
    # adjectives the suffix rules miss or misread
    "new": "JJ", "good": "JJ", "high": "JJ", "low": "JJ", "own": "JJ",
    "same": "JJ", "other": "JJ", "whole": "JJ", "large": "JJ",
    "small": "JJ", "important": "JJ", "different": "JJ", "possible": "JJ",
    "available": "JJ", "several": "JJ", "medical": "JJ", "financial": "JJ",
    "comprehensive": "JJ", "annual": "JJ", "monthly": "JJ", "yearly": "JJ",
    "early": "JJ", "likely": "JJ", "additional": "JJ", "optional": "JJ",
    "minimum": "JJ", "maximum": "JJ", "total": "JJ", "full": "JJ",
    "many": "JJ", "much": "JJ", "few": "JJ", "certain": "JJ",
    "various": "JJ", "due": "JJ", "free": "JJ", "main": "JJ",
    "motor": "NN", "third": "JJ", "higher": "JJ", "lower": "JJ",
    "greater": "JJ", "smaller": "JJ", "larger": "JJ", "better": "JJ",
    "worse": "JJ", "careful": "JJ", "standard": "JJ",
    # number words
    "one": "CD", "two": "CD", "three": "CD", "four": "CD", "five": "CD",
    "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD",
    "zero": "CD", "hundred": "CD", "thousand": "CD", "million": "CD",
}

# Irregular verb forms -> lemma.  Identity entries guard stems whose
# spelling ends in a suffix the stripping rules would mangle.
IRREGULAR_VERBS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "be": "be", "been": "be", "being": "be",
    "has": "have", "have": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    "made": "make", "making": "make",
    "took": "take", "taken": "take", "taking": "take",
    "gave": "give", "given": "give", "giving": "give",
    "got": "get", "gotten": "get", "getting": "get",
    "rose": "rise", "risen": "rise", "rising": "rise",
    "fell": "fall", "fallen": "fall",
    "paid": "pay", "said": "say", "says": "say", "saying": "say",
    "held": "hold", "kept": "keep", "sent": "send",
    "found": "find", "met": "meet", "grew": "grow", "grown": "grow",
    "became": "become", "becoming": "become",
    "chose": "choose", "chosen": "choose", "choosing": "choose",
    "bought": "buy", "sold": "sell", "knew": "know", "known": "know",
    "saw": "see", "seen": "see", "seeing": "see",
    "came": "come", "coming": "come",
    "began": "begin", "begun": "begin", "beginning": "begin",
    "wrote": "write", "written": "write", "writing": "write",
    "agreed": "agree", "agreeing": "agree", "freed": "free",
    "created": "create", "creates": "create", "creating": "create",
    "left": "leave", "leaving": "leave", "lost": "lose", "losing": "lose",
    "brought": "bring", "thought": "think", "felt": "feel",
    # identity guards: stems that end in -s/-ed/-ing/-eed patterns
    "need": "need", "needs": "need", "feed": "feed", "speed": "speed",
    "proceed": "proceed", "exceed": "exceed", "succeed": "succeed",
    "bring": "bring", "bringing": "bring", "brings": "bring",
    "sing": "sing", "singing": "sing", "sang": "sing", "sung": "sing",
    "ring": "ring", "ringing": "ring", "spring": "spring",
    "string": "string", "swing": "swing", "swinging": "swing",
    "cling": "cling", "fling": "fling", "sling": "sling", "wring": "wring",
    "hang": "hang", "hanging": "hang", "belong": "belong",
    "belonging": "belong", "focus": "focus", "focused": "focus",
    "focusing": "focus", "focuses": "focus",
    "set": "set", "setting": "set", "sets": "set",
    "put": "put", "putting": "put", "puts": "put",
    "let": "let", "letting": "let", "lets": "let",
}

# Irregular or ambiguous plural nouns -> singular lemma.  The -ses->-s rule
# is right for bus/gas/class stems but wrong for -se stems, which live here.
NOUN_EXCEPTIONS = {
    "men": "man", "women": "woman", "children": "child", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "lives": "life", "wives": "wife",
    "knives": "knife", "leaves": "leaf", "halves": "half", "selves": "self",
    "shelves": "shelf", "analyses": "analysis", "bases": "basis",
    "crises": "crisis", "theses": "thesis", "criteria": "criterion",
    "data": "data", "people": "people", "series": "series",
    "cases": "case", "houses": "house", "causes": "cause",
    "clauses": "clause", "expenses": "expense", "licenses": "license",
    "premises": "premise", "purchases": "purchase", "increases": "increase",
    "releases": "release", "diseases": "disease", "purposes": "purpose",
    "courses": "course", "nurses": "nurse", "horses": "horse",
    "phrases": "phrase", "databases": "database", "phases": "phase",
    "responses": "response", "senses": "sense", "offenses": "offense",
    "defenses": "defense", "shoes": "shoe", "heroes": "hero",
}

# Words a period may follow without ending the sentence.
ABBREVIATIONS = frozenset({
    "e.g", "i.e", "etc", "cf", "vs", "mr", "mrs", "ms", "dr", "prof",
    "fig", "no", "inc", "ltd", "co", "corp", "st", "jr", "sr", "dept",
    "approx", "est", "min", "max", "u.s", "u.k",
})
