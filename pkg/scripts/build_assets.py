#!/usr/bin/env python3
"""Regenerate the bundled data assets.

Writes category lexicons, register n-gram demo tables, the frequency-rank
word list, and the tagged sentences the bundled POS model is trained on.
Everything is deterministic; rerunning reproduces the checked-in files.
"""

from __future__ import annotations

import random
import sys
from collections import Counter
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from vscreen.corpus.normalize import normalize_text  # noqa: E402
from vscreen.features.lexicons import Lexicon, save_lexicon  # noqa: E402
from vscreen.features.ngrams import NgramTable, save_ngram_table  # noqa: E402
from vscreen.textproc.tokenizer import segment_sentences, tokenize  # noqa: E402

ASSETS = REPO / "src" / "vscreen" / "assets"

# --------------------------------------------------------------------------
# category lexicons
# --------------------------------------------------------------------------

EMOTION = {
    # introspection axis
    "EMOecs": "ecstatic ecstasy euphoric euphoria elated elation overjoyed thrilled exhilarated rapture jubilant",
    "EMOjoy": "happy happiness joy joyful glad cheerful delighted smile laugh enjoy fun merry upbeat yay",
    "EMOcon": "content contented satisfied satisfaction fulfilled comfortable cozy grateful thankful settled fine",
    "EMOmel": "melancholy gloomy gloom wistful somber downcast moody nostalgia nostalgic dreary glum",
    "EMOsad": "sad sadness unhappy sorrow cry crying tear tearful miserable heartache lonely hurt",
    "EMOgri": "grief grieving mourn mourning bereft devastated anguish despair hopeless weep loss",
    # temper axis
    "EMObli": "bliss blissful heavenly paradise divine serendipity beatific sublime",
    "EMOcal": "calm calmly relaxed relax composed steady collected mellow chill unhurried",
    "EMOser": "serene serenity peaceful peace tranquil tranquility harmony soothing restful stillness",
    "EMOann": "annoyed annoying annoyance irritated irritating irritation bothered nuisance grumpy cranky frustrated frustrating frustration",
    "EMOang": "angry anger mad resent resentment hostile bitter snapped yell yelled shout shouted fume",
    "EMOrag": "rage enraged furious fury livid seething outraged wrath scream screaming explode",
    # attitude axis
    "EMOdel": "delight delightful charming lovely sweet adorable charmed pleasing enchanting",
    "EMOple": "pleasant nice agreeable enjoyable friendly warm kind polite welcoming gracious",
    "EMOacc": "accept acceptance accepting tolerant tolerance embrace welcome approve approval respect trust",
    "EMOdsl": "dislike disliked unpleasant distaste averse aversion unfriendly lame dreary meh",
    "EMOdsg": "disgust disgusting disgusted gross nasty revolting repulsive sickening vile yuck filthy",
    "EMOloa": "loathe loathing hate hated hatred hateful despise detest abhor contempt hideous",
    # sensitivity axis
    "EMOent": "enthusiasm enthusiastic excited excitement pumped stoked passionate passion hyped thrill",
    "EMOeag": "eager eagerness keen motivated motivation driven ambitious determined ready willing",
    "EMOres": "responsive attentive alert engaged curious curiosity interested interest aware mindful",
    "EMOanx": "anxious anxiety nervous worried worry worrying uneasy stress stressed stressful tense restless overwhelmed jittery",
    "EMOfea": "fear afraid scared scary frightened frightening fearful dread threat threatened intimidated",
    "EMOter": "terror terrified terrifying horror horrified horrifying panic panicked nightmare petrified",
}

TOPIC = {
    "TOPart": "art artist painting paint museum gallery sculpture drawing draw sketch canvas exhibit creative design poster",
    "TOPbus": "business company market profit customer client sale sell manager startup invoice budget finance investor trade brand",
    "TOPedu": "school teacher student class homework lesson study exam grade college university learn education course degree library semester",
    "TOPent": "movie film show series actor celebrity theater cinema comedy drama episode trailer entertainment festival",
    "TOPfas": "fashion style clothes dress shirt shoe outfit wear jacket jean skirt trend designer makeup wardrobe fabric",
    "TOPfoo": "food eat meal dinner lunch breakfast cook recipe kitchen restaurant pizza bread cheese coffee tea cake snack hungry delicious taste",
    "TOPhea": "health doctor hospital medicine symptom therapy therapist sick illness pain sleep diagnosis treatment clinic nurse medication appointment recovery healthy",
    "TOPmus": "music song sing singer band album guitar piano drum melody concert playlist lyric rhythm tune",
    "TOPpol": "politics political government election vote president minister policy law senate congress campaign parliament protest",
    "TOPrel": "relationship friend family partner marriage wedding boyfriend girlfriend husband wife mother father parent date dating child",
    "TOPsci": "science research experiment theory physics chemistry biology scientist lab evidence hypothesis discovery space planet",
    "TOPspo": "sport team player match coach football soccer basketball tennis race win score gym training workout",
    "TOPtec": "technology computer software app phone internet code program website device screen laptop online digital robot server",
    "TOPtra": "travel trip flight airport hotel vacation journey tourist beach mountain passport luggage destination map train ticket",
}

GRAMMATICAL = {
    "PRN": "i you he she it we they me him her us them myself yourself himself herself itself ourselves yourselves themselves "
           "mine yours his hers ours theirs someone anyone everyone nobody somebody anybody everybody something anything everything nothing who whom",
    "PRN1s": "i me",
    "PRN1p": "we us",
    "PRN2": "you",
    "PRN3s": "he she it him her",
    "PRN3p": "they them",
    "PRNposs": "mine yours his hers ours theirs",
    "PRNref": "myself yourself himself herself itself ourselves yourselves themselves",
    "PRNref1s": "myself",
    "PRNindef": "someone anyone everyone nobody somebody anybody everybody something anything everything nothing",
    "DET": "the a an this these those every each either neither another such some any no all both my your his her its our their",
    "DETdef": "the",
    "DETindef": "a an",
    "DETdem": "this these those",
    "DETposs": "my your his her its our their",
    "DETposs1s": "my",
    "DETposs1p": "our",
    "PREP": "in on at by for with about against between into through during before after above below to from up down of off over under "
            "near without within along across behind beyond around among despite toward towards upon onto inside outside via per",
    "AUX": "am is are was were be been being have has had do does did will would can could may might must shall should ought",
    "AUXmod": "will would can could may might must shall should ought",
    "AUXbe": "am is are was were be been being",
    "AUXhave": "have has had",
    "AUXdo": "do does did",
    "CNJcrd": "and but or nor so yet",
    "CNJsub": "that because if when while since unless although though whereas until whether once as",
    "QUANT": "all some many few much more most several any each every both little less least plenty",
    "NEG": "not never no nothing nobody nowhere neither nor n't none cannot can't won't don't didn't doesn't isn't aren't wasn't weren't couldn't shouldn't wouldn't",
    "INTJ": "yes yeah oh wow hey hi hello ok okay hmm ugh lol omg please thanks",
}

CONNECTIVES = {
    "CONN": "",  # filled with the union below
    "CONNcaus": "because therefore thus hence so consequently since",
    "CONNadve": "but however although though yet nevertheless whereas still instead",
    "CONNtemp": "then before after when while until meanwhile next finally later soon",
    "CONNadd": "and also moreover furthermore besides additionally plus too",
}

# emotion and topic words match on lemmas; function-word categories on surfaces
LEMMA_CATEGORIES = set(EMOTION) | set(TOPIC)


def write_lexicons() -> None:
    out = ASSETS / "lexicons"
    out.mkdir(parents=True, exist_ok=True)
    union = set()
    for words in CONNECTIVES.values():
        union |= set(words.split())
    CONNECTIVES["CONN"] = " ".join(sorted(union))
    for table in (EMOTION, TOPIC, GRAMMATICAL, CONNECTIVES):
        for category, words in table.items():
            mode = "lemma" if category in LEMMA_CATEGORIES else "surface"
            lex = Lexicon(
                name=category,
                category=category,
                entries=frozenset(words.split()),
                match_mode=mode,
            )
            save_lexicon(lex, out / f"{category}.lex")


# --------------------------------------------------------------------------
# register demo texts -> n-gram tables
# --------------------------------------------------------------------------

REGISTER_TEXTS = {
    "fiction": """
        The old house stood at the end of the lane. She walked slowly toward the
        door and listened. The wind moved through the tall grass behind her. He
        had waited there for many years, and nobody ever asked him why. She opened
        the door and stepped into the dark hall. A clock ticked somewhere above
        the stairs. The room smelled of dust and old paper. He turned to the
        window and watched the rain fall on the garden. I remembered the summer
        we spent by the river, she said quietly. The fire burned low in the
        kitchen. They sat together at the long table and said nothing for a while.
        The night came early that autumn. She held the letter in her hand and read
        it again. The words had not changed. He stood up, crossed the room, and
        put another log on the fire. Outside, the rain kept falling. The dog slept
        by the door as if nothing in the world could wake it. She thought about
        the city and the life she had left there. In the morning the light would
        come back, and the house would feel almost kind again.
    """,
    "weblog": """
        So today I finally cleaned my desk and honestly it felt amazing. I keep
        telling myself that I will write more often, but life gets busy and the
        blog just sits here. Last week we went to the new coffee place near the
        park and the coffee was actually really good. I want to post some photos
        soon. My sister says I take too many pictures of my breakfast, and she is
        probably right. Anyway, I started a new routine this month. I wake up
        early, I write a short list of tasks, and I try to finish the hard ones
        first. It works most days. Some days I just watch videos and feel bad
        about it, which is fine too. If you have tips for staying focused, leave
        a comment below. I read every comment, even the weird ones. Next week I
        will post about the garden project. The tomatoes are a disaster but the
        flowers look great. Thanks for reading, as always. This little blog keeps
        me honest about my plans and my mess.
    """,
    "web": """
        Welcome to our help center. This page explains how to create an account,
        manage your settings, and keep your data safe. To get started, click the
        sign up button at the top of the page. Enter your email address and choose
        a strong password. You will receive a message with a link to confirm your
        account. If you do not see the message, check your spam folder. You can
        change your password at any time from the settings page. We recommend
        that you update it every few months. The privacy section lets you control
        what other users can see. Your profile shows your name and your photo by
        default. You can hide both with one click. For billing questions, visit
        the support page and open a ticket. Our team answers most tickets within
        two business days. The service is available on the web and on mobile
        devices. See the downloads page for the latest version of the app. Thank
        you for choosing our service.
    """,
    "news": """
        The city council approved the new transit plan on Tuesday after a long
        public meeting. Officials said the project will add two bus lines and
        improve service in the northern districts. The plan passed by a vote of
        seven to two. Residents raised concerns about construction noise and the
        loss of parking near the main square. A spokesperson for the transit
        agency said work will begin in March and should finish within two years.
        The budget sets aside forty million dollars for the first phase. Local
        business owners asked the council for support during construction. The
        mayor told reporters that the city will review traffic data every month
        and publish the results online. Experts from the university said the new
        lines could cut travel times by twenty percent. The council will hold
        another hearing next week to discuss the second phase. Critics of the
        plan said the city should spend the money on schools instead. The vote
        followed two years of study and debate.
    """,
    "spoken": """
        So yeah, I was talking to my brother yesterday and he said the game got
        moved to Saturday. And I was like, okay, that actually works better for
        me. You know how it is, the weekend just fills up so fast. Anyway, we got
        there early and the parking was a nightmare, right. But the seats were
        good, really good actually. My brother kept saying we should get food
        before the second half, and of course the line was huge. I mean, it
        always is. So we missed like ten minutes, which was annoying. But yeah,
        great game overall. Oh, and then on the way back the train was delayed,
        so we just stood there talking about work and stuff. He has this new job,
        he really likes it, the people are nice, the hours are okay. I said good
        for you, honestly. We should do this more often, you know. Everybody is
        busy, sure, but it was a really nice day. Anyway, that was my weekend,
        pretty much.
    """,
}


def write_ngram_tables() -> None:
    out = ASSETS / "ngrams"
    out.mkdir(parents=True, exist_ok=True)
    for register, text in REGISTER_TEXTS.items():
        normalized = normalize_text(" ".join(text.split()))
        sentences = segment_sentences(normalized)
        for order in (2, 3):
            counts: Counter[tuple[str, ...]] = Counter()
            for sent in sentences:
                words = [t for t in tokenize(sent) if any(c.isalnum() for c in t)]
                for i in range(len(words) - order + 1):
                    counts[tuple(words[i : i + order])] += 1
            table = NgramTable(
                register=register,
                order=order,
                counts=dict(counts),
                max_count=max(counts.values()),
            )
            save_ngram_table(table, out / f"{register}_{order}gram.vsngr")


# --------------------------------------------------------------------------
# frequency-rank list
# --------------------------------------------------------------------------

COMMON_WORDS = """
the i and a to of you it that my in is for was on we me with this so but have
not be at they are he she had as do there what all just like about out up her
his if one can when time will would go get know from or them an more no some
day people said day now has did were then than could into see who himself too
very really think back good new way also after our us other how been over only
because work first well even want down these those your its two any may where
home off right still life should old year make made take come here say little
most before great by night much such their around went again look long own
thing many man found through himself house never under last each three put
something nothing while why between always being next few got away room fact
"""


def write_wordranks() -> None:
    counts: Counter[str] = Counter()
    for text in REGISTER_TEXTS.values():
        normalized = normalize_text(" ".join(text.split()))
        for tok in tokenize(normalized):
            if any(c.isalnum() for c in tok):
                counts[tok] += 1
    head: list[str] = []
    seen = set()
    for w in COMMON_WORDS.split():
        if w not in seen:
            head.append(w)
            seen.add(w)
    tail = [w for w, _ in counts.most_common() if w not in seen]
    lines = ["# frequency-rank word list, one word per line, rank = line order"]
    lines.extend(head + tail)
    (ASSETS / "wordranks.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# tagged corpus for the POS model
# --------------------------------------------------------------------------

NOUNS = """dog cat house day time morning friend brain mind focus task list phone
game rain garden book story music project meeting week night kid family room car
road city park idea plan thing problem answer question teacher test dinner
breakfast job desk email letter movie song team coach sister brother mother
father neighbor kitchen window door tree bird water food bread apple medicine
habit routine goal memory noise light weekend money shop store street train bus
trip visit lesson class paper note pen key bag clock hour minute moment reason
choice change chance effort energy mess pile laundry dish homework deadline
alarm nap break hobby puzzle picture photo wall floor chair table bed couch yard
gate fence flower leaf branch doctor school work coffee""".split()

VERBS_BASE = """run walk eat sleep think feel know like love hate start finish
forget remember lose find try keep stop play read write talk call clean cook
drive miss need want watch help stay wait look listen open close wash carry
bring move push pull throw catch hold wear buy pay sit stand smile laugh cry
shout whisper climb jump swim dance sing draw paint build fix break plant water
visit text phone email study learn teach explain describe notice imagine hope
wish plan pack travel arrive leave return rest relax worry panic struggle
manage organize tidy sort stack fold hang sweep mop scrub rinse dry fill empty
pour mix stir bake taste smell touch hear meet greet hug kiss wave nod shrug""".split()

ADJECTIVES = """big small good bad happy sad angry tired busy calm quiet loud
long short new old hard easy late early messy bright dark slow fast nice weird
boring fun warm cold hot cool dry wet heavy light empty full clean dirty fresh
stale sweet sour bitter salty soft rough smooth sharp dull thick thin wide
narrow deep shallow high low near far young strange familiar simple complex
cheap expensive free rare common safe risky healthy sick strong weak brave
shy proud humble honest careful careless patient restless curious bored""".split()

ADVERBS = """quickly slowly really very always never often sometimes today
yesterday tomorrow again here there now then too also soon maybe probably
usually finally suddenly quietly loudly carefully barely almost already still
together alone early late everywhere nowhere somewhere rarely seldom twice
once definitely certainly clearly honestly actually basically mostly partly
nearly exactly roughly gently firmly softly hardly""".split()

PROPER = """anna james maria tom sara london paris berlin tokyo reddit june
april monday friday sunday emma lucas nora henry alice oliver""".split()


def _inflect_3s(verb: str) -> str:
    if verb.endswith(("s", "sh", "ch", "x", "z")):
        return verb + "es"
    if verb.endswith("y") and verb[-2] not in "aeiou":
        return verb[:-1] + "ies"
    return verb + "s"


def _inflect_ing(verb: str) -> str:
    if verb.endswith("e") and not verb.endswith("ee"):
        return verb[:-1] + "ing"
    if (
        len(verb) >= 3
        and verb[-1] in "bdgklmnprtv"
        and verb[-2] in "aeiou"
        and verb[-3] not in "aeiou"
    ):
        return verb + verb[-1] + "ing"
    return verb + "ing"


def _inflect_past(verb: str) -> str:
    irregular = {
        "run": "ran", "eat": "ate", "sleep": "slept", "think": "thought",
        "feel": "felt", "know": "knew", "forget": "forgot", "lose": "lost",
        "keep": "kept", "read": "read", "write": "wrote", "drive": "drove",
        "buy": "bought", "pay": "paid", "sit": "sat", "stand": "stood",
        "throw": "threw", "catch": "caught", "hold": "held", "wear": "wore",
        "bring": "brought", "break": "broke", "swim": "swam", "sing": "sang",
        "draw": "drew", "build": "built", "hear": "heard", "meet": "met",
        "find": "found", "leave": "left", "teach": "taught", "learn": "learned",
    }
    if verb in irregular:
        return irregular[verb]
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2] not in "aeiou":
        return verb[:-1] + "ied"
    if (
        len(verb) >= 3
        and verb[-1] in "bdgklmnprtv"
        and verb[-2] in "aeiou"
        and verb[-3] not in "aeiou"
    ):
        return verb + verb[-1] + "ed"
    return verb + "ed"


def build_tagged_corpus(n_sentences: int = 1500, seed: int = 7) -> list[str]:
    """Tagged sentences from hand-built templates over a fixed word bank."""
    rng = random.Random(seed)

    def noun():
        return (rng.choice(NOUNS), "noun")

    def propn():
        return (rng.choice(PROPER), "propn")

    def adj():
        return (rng.choice(ADJECTIVES), "adj")

    def adv():
        return (rng.choice(ADVERBS), "adv")

    def base():
        return (rng.choice(VERBS_BASE), "verb")

    def v3s():
        return (_inflect_3s(rng.choice(VERBS_BASE)), "verb")

    def ving():
        return (_inflect_ing(rng.choice(VERBS_BASE)), "verb")

    def vpast():
        return (_inflect_past(rng.choice(VERBS_BASE)), "verb")

    def lit(*pairs):
        return lambda: rng.choice(pairs)

    W = {
        "N": noun, "P": propn, "ADJ": adj, "ADV": adv,
        "VB": base, "V3": v3s, "VG": ving, "VD": vpast,
        "PRS": lit(("i", "pron"), ("you", "pron"), ("we", "pron"), ("they", "pron")),
        "PR3": lit(("he", "pron"), ("she", "pron"), ("it", "pron")),
        "DET": lit(("the", "det"), ("a", "det"), ("this", "det"), ("my", "det"), ("our", "det")),
        "PREP": lit(("in", "adp"), ("on", "adp"), ("at", "adp"), ("with", "adp"),
                    ("for", "adp"), ("to", "adp"), ("from", "adp"), ("about", "adp")),
        "AUXP": lit(("was", "aux"), ("is", "aux")),   # singular
        "AUXPL": lit(("were", "aux"), ("are", "aux")),  # plural
        "MOD": lit(("will", "aux"), ("can", "aux"), ("should", "aux"), ("must", "aux")),
        "SC": lit(("because", "sconj"), ("when", "sconj"), ("if", "sconj"),
                  ("while", "sconj"), ("that", "sconj")),
        "CC": lit(("and", "conj"), ("but", "conj"), ("or", "conj")),
        "NOT": lit(("not", "part")),
        "NUM": lit(("two", "num"), ("three", "num"), ("five", "num"), ("ten", "num")),
        "END": lit((".", "punct"), ("!", "punct")),
        "Q": lit(("?", "punct")),
        "CM": lit((",", "punct")),
        "INTJ": lit(("yes", "intj"), ("oh", "intj"), ("wow", "intj"), ("okay", "intj")),
    }

    templates = [
        "PRS VB DET N END",
        "PRS VB DET ADJ N END",
        "PR3 V3 DET N END",
        "PR3 V3 ADV END",
        "DET N V3 PREP DET N END",
        "DET ADJ N V3 DET N END",
        "PRS VD DET N PREP DET N END",
        "PR3 VD DET ADJ N END",
        "P VD DET N END",
        "P V3 DET N ADV END",
        "PRS VD ADV END",
        "DET N AUXP ADJ END",
        "DET N AUXP ADV ADJ END",
        "PRS AUXPL VG DET N END",
        "PR3 AUXP VG PREP DET N END",
        "P AUXP VG DET N END",
        "PRS MOD VB DET N END",
        "PR3 MOD NOT VB DET N END",
        "PRS VB DET N SC PR3 VD DET N END",
        "PRS VD DET N SC DET N AUXP ADJ END",
        "SC PR3 VD CM PRS VD DET N END",
        "DET N CC DET N AUXPL ADJ END",
        "PRS VB CC PR3 V3 END",
        "INTJ CM PRS VD DET N END",
        "INTJ CM DET N AUXP ADJ END",
        "DET N PREP DET N AUXP ADJ END",
        "PRS VB NUM N END",
        "PR3 VD NUM ADJ N END",
        "ADV CM PRS VD DET N END",
        "DET ADJ ADJ N V3 ADV END",
        "MOD PRS VB DET N Q",
        "PRS ADV VB DET N END",
        "PR3 ADV V3 DET N END",
        "DET N VD ADV PREP DET N END",
        "P CC P VD PREP DET N END",
        # imperatives: sentence-initial verbs
        "VB DET N END",
        "VB ADV END",
        "ADV VB DET N END",
        "V3 END",
        "VD END",
    ]

    # a few fully hand-written sentences anchoring common patterns
    fixed = [
        "she_pron runs_verb ._punct",
        "he_pron runs_verb to_adp the_det park_noun ._punct",
        "runs_verb ._punct",
        "i_pron think_verb that_sconj she_pron left_verb because_sconj it_pron rained_verb ._punct",
        "it_pron rained_verb all_det day_noun ._punct",
        "the_det dogs_noun barked_verb at_adp the_det gate_noun ._punct",
        "my_det dogs_noun sleep_verb on_adp the_det couch_noun ._punct",
        "she_pron thinks_verb about_adp the_det plan_noun ._punct",
        "they_pron think_verb it_pron works_verb ._punct",
        "he_pron left_verb early_adv ._punct",
        "left_verb ._punct",
        "thinks_verb ._punct",
        "rained_verb ._punct",
    ]

    lines = []
    for i in range(n_sentences):
        template = templates[i % len(templates)]
        pairs = [W[slot]() for slot in template.split()]
        lines.append(" ".join(f"{w}_{t}" for w, t in pairs))
    # repeat the anchors so held-out slices always contain trained patterns
    lines.extend(fixed * 3)
    return lines


def write_tagged_corpus() -> None:
    lines = build_tagged_corpus()
    header = "# tagged sentences for the bundled POS model: word_tag, one sentence per line"
    (ASSETS / "textproc" / "tagger_corpus.txt").write_text(
        header + "\n" + "\n".join(lines) + "\n", encoding="utf-8"
    )


def main() -> None:
    write_lexicons()
    write_ngram_tables()
    write_wordranks()
    write_tagged_corpus()
    print("assets written under", ASSETS)


if __name__ == "__main__":
    main()
