#!/usr/bin/env python3
"""Builds tests/fixtures/sentiment_cases.tsv.

Runs the reference analyzer (vader_ref.py) over a fixed 200-sentence list that
exercises every scoring rule: lexicon hits, boosters/dampeners at all lookback
distances, ALL-CAPS emphasis, every negation form, the "no"/"never"/"without
doubt"/"least" branches, "but" reweighting (including its value-lookup quirk),
special-case idioms with both lookback and lookahead matches, punctuation
amplification caps, emoticons, and degenerate inputs.
"""
import os
import random
import subprocess
import sys

HAND = [
    # plain lexicon hits
    "The book was good.",
    "The book was good",
    "VADER is smart, handsome, and funny.",
    "VADER is smart, handsome, and funny!",
    "VADER is very smart, handsome, and funny.",
    "VADER is VERY SMART, handsome, and FUNNY.",
    "VADER is VERY SMART, handsome, and FUNNY!!!",
    "VADER is not smart, handsome, nor funny.",
    "At least it isn't a horrible book.",
    "The book was only kind of good.",
    "Not bad at all",
    "a truly wonderful and generous friend",
    "the proposal is a disaster",
    "what a terrible, horrible, awful day",
    "peace and prosperity for every family",
    "success breeds confidence",
    "this betrayal hurts",
    "pure joy and happiness",
    "an honest, brave, thoughtful leader",
    "the corrupt deal collapsed",
    # boosters at distance 1, 2, 3 with decay
    "very good",
    "really very good",
    "so incredibly very good",
    "it was absolutely wonderful",
    "the plan is extremely dangerous",
    "this bill is utterly hopeless",
    "a remarkably strong economy",
    "deeply troubling reports tonight",
    "the most amazing recovery",
    "an exceptionally talented, truly generous mentor",
    "totally and completely broken",
    "hugely disappointing result",
    "the uber wealthy won again",
    "quite good, really",
    "more jobs and more growth",
    # dampeners
    "kinda good",
    "barely alive",
    "hardly a victory",
    "the speech was sort of inspiring",
    "the funding was just enough to help",
    "marginally better today",
    "a slightly disappointing turnout",
    "somewhat troubled by the vote",
    "occasionally brilliant, mostly boring",
    "it was kind of a disaster",
    "kind of",
    "almost perfect",
    # ALL-CAPS emphasis and the cap-differential gate
    "this is a GREAT victory",
    "this is a great victory",
    "GREAT GOOD WIN",
    "the HORRIBLE truth came out",
    "STOP this TERRIBLE bill now",
    "what a WIN for freedom!",
    "A GOOD day",
    "REALLY good news",
    "really GOOD news",
    "AMAZING!!! simply amazing",
    # negation forms and distances
    "not good",
    "not very good",
    "this is not a good plan",
    "nobody thinks it is not fine",
    "the senate cannot pass a good bill",
    "they didn't help the victims",
    "it isn't hopeless",
    "we won't abandon our allies",
    "there was never a better moment",
    "none of this is acceptable news",
    "neither safe nor fair",
    "he rarely tells the truth",
    "they seldom praise anyone",
    "despite the win, morale fell",
    "without help, families suffer",
    "it wasn't a total failure",
    "you can't ignore this crisis",
    "i don't trust the process",
    "this doesn't feel like progress",
    "we haven't lost hope",
    # "no" special cases
    "no",
    "the answer is no",
    "no good",
    "there is no hope left",
    "no war",
    "no deal is better than a bad deal",
    "no no no good",
    "no compromise or hope in sight",
    "no courage nor wisdom in that vote",
    "say no to violence",
    # never so/this and without doubt branches
    "never so good",
    "it was never so good",
    "never this good",
    "she has never been so happy",
    "it was so good",
    "the outcome was this good",
    "without doubt happy days are ahead",
    "it is without doubt a success",
    "never so bad",
    "they were never so cruel",
    # least checks
    "least happy about the ruling",
    "the least popular senator",
    "at least happy families remain",
    "at the very least safe",
    "the very least happy member",
    "this is the least bad option",
    # but reweighting
    "the plot was good, but the characters are uncompelling and the dialog is not great.",
    "good but bad",
    "bad but good",
    "the economy is strong but families struggle",
    "i love the idea but hate the execution",
    "but we won",
    "nothing but victories",
    "win the game but :p",
    "the hearing was fair but the verdict was cruel but just",
    "smart but lazy",
    # special-case idioms
    "this mixtape is the shit",
    "that performance was the bomb",
    "he is one bad ass senator",
    "waiting at the bus stop",
    "the claim was yeah right",
    "their plan is the kiss of death",
    "she has a beating heart",
    "he left town with a broken heart",
    "good grief the shit happened",
    "this cake is to die for",
    # punctuation amplification
    "good!",
    "good!!",
    "good!!!",
    "good!!!!",
    "good!!!!!",
    "good!!!!!!!!",
    "why so bad?",
    "why so bad??",
    "why so bad???",
    "why so bad?????",
    "is this good? really good??",
    "bad?! good?!",
    # emoticons and short-token handling
    "today was great :)",
    "today was rough :(",
    "massive win :D",
    "politics :/",
    "we love this <3",
    ":)",
    ":( :( :(",
    "ok :p",
    # degenerate and neutral inputs
    "!!!",
    "???",
    "the committee met on tuesday",
    "quarterly appropriations schedule",
    "1234 5678",
    "a b c d",
    # raw-text artifacts: urls, mentions, hashtags, contractions
    "terrible news https://t.co/abc123",
    "@SenExample says the bill is good",
    "#hope is alive in this chamber",
    "RT @rep_sample: proud of our caucus",
    "they're hopeful it'll pass",
    "shouldn't we protect the border?",
    "won't somebody help these families",
    "it's a win-win agreement",
    "self-serving politicians failed us",
    "the so-called experts were wrong",
]

POS_WORDS = ["good", "great", "strong", "proud", "hopeful", "safe", "brave",
             "wonderful", "successful", "fair", "honest", "secure", "thriving"]
NEG_WORDS = ["bad", "terrible", "dangerous", "corrupt", "broken", "cruel",
             "hopeless", "violent", "tragic", "reckless", "unfair", "toxic"]
SUBJECTS = ["the bill", "this amendment", "the border policy", "our economy",
            "the climate deal", "the healthcare plan", "the energy market",
            "this nomination", "the trade pact", "the relief package"]
BOOSTS = ["very", "really", "so", "extremely", "incredibly", "totally", ""]
NEGATORS = ["not", "never", "hardly", ""]
TAILS = ["", "!", "!!", "?", " today", " for working families",
         " according to the report", " and everyone knows it"]


def main() -> None:
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.normpath(os.path.join(here, "..", ".."))
    lexicon = os.path.join(root, "data", "vader_lexicon.txt")
    out_tsv = os.path.join(root, "tests", "fixtures", "sentiment_cases.tsv")

    sentences = list(HAND)
    rng = random.Random(20220815)
    while len(sentences) < 200:
        subject = rng.choice(SUBJECTS)
        neg = rng.choice(NEGATORS)
        boost = rng.choice(BOOSTS)
        word = rng.choice(POS_WORDS if rng.random() < 0.5 else NEG_WORDS)
        tail = rng.choice(TAILS)
        parts = [subject, "is"]
        if neg:
            parts.append(neg)
        if boost:
            parts.append(boost)
        parts.append(word)
        sentence = " ".join(parts) + tail
        if sentence not in sentences:
            sentences.append(sentence)

    sentences_path = os.path.join(here, "fixture_sentences.txt")
    with open(sentences_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(sentences) + "\n")

    result = subprocess.run(
        [sys.executable, os.path.join(here, "vader_ref.py"), lexicon, sentences_path],
        check=True, capture_output=True, text=True)
    with open(out_tsv, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("text\tneg\tneu\tpos\tcompound\n")
        fh.write(result.stdout)
    n = len(result.stdout.splitlines())
    print(f"wrote {n} cases to {out_tsv}")


if __name__ == "__main__":
    main()
