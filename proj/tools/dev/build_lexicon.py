#!/usr/bin/env python3
"""Regenerates data/vader_lexicon.txt from the curated table below.

The file follows the standard tab-separated layout (token <TAB> mean valence);
any published lexicon in the same layout can be dropped in as a replacement.
"""
import os

ENTRIES = {
    # --- anchored to published reference outputs (see tests) ---
    "good": 1.9, "great": 3.1, "smart": 1.7, "handsome": 2.2, "funny": 1.9,
    "bad": -2.5, "horrible": -2.5, "uncompelling": -0.9, "no": -1.2,
    # --- general positive vocabulary ---
    "able": 1.0, "abundant": 2.1, "accept": 1.3, "accepted": 1.3, "accomplish": 1.9,
    "accomplished": 2.0, "achievable": 1.3, "achieve": 1.7, "achievement": 2.0,
    "admire": 2.1, "admired": 2.2, "adorable": 2.6, "adore": 2.9, "advantage": 1.6,
    "adventure": 1.4, "affection": 2.4, "affordable": 1.4, "agree": 1.5, "agreeable": 1.8,
    "agreement": 1.4, "aid": 1.5, "alive": 1.6, "alliance": 1.2, "ally": 1.4,
    "amaze": 2.5, "amazed": 2.4, "amazing": 2.8, "ambitious": 1.6, "amuse": 1.7,
    "amused": 1.8, "amusing": 1.7, "angel": 2.4, "appreciate": 2.0, "appreciated": 2.1,
    "appreciation": 2.2, "approval": 1.8, "approve": 1.7, "approved": 1.8, "assure": 1.2,
    "assured": 1.4, "astonishing": 2.1, "attract": 1.4, "attractive": 1.9, "award": 2.0,
    "awarded": 2.2, "awesome": 3.1, "beautiful": 2.9, "beauty": 2.8, "beloved": 2.7,
    "benefit": 1.7, "benefits": 1.5, "best": 3.2, "better": 1.9, "bless": 2.2,
    "blessed": 2.9, "blessing": 2.6, "bliss": 2.7, "bold": 1.2, "boost": 1.5,
    "brave": 2.4, "bravery": 2.5, "bright": 1.9, "brilliant": 2.8, "calm": 1.3,
    "capable": 1.6, "care": 2.2, "cared": 1.9, "careful": 1.4, "cares": 1.9,
    "caring": 2.2, "celebrate": 2.7, "celebrated": 2.4, "celebration": 2.7, "champion": 2.4,
    "charity": 1.8, "charm": 2.0, "charming": 2.4, "cheer": 2.3, "cheerful": 2.5,
    "cherish": 2.3, "clean": 1.7, "clever": 2.0, "comfort": 1.9, "comfortable": 1.8,
    "commend": 1.9, "commitment": 1.6, "compassion": 2.3, "compassionate": 2.4, "competent": 1.5,
    "confidence": 2.3, "confident": 2.2, "congrats": 2.4, "congratulations": 2.9, "cool": 1.3,
    "courage": 2.2, "courageous": 2.4, "create": 1.1, "creative": 1.9, "credit": 1.5,
    "cure": 2.0, "cute": 2.0, "defend": 1.3, "defended": 1.1, "delight": 2.7,
    "delighted": 2.8, "delightful": 2.8, "dependable": 1.8, "deserve": 1.0, "deserved": 1.4,
    "determined": 1.5, "devoted": 2.0, "dignity": 1.9, "diligent": 1.7, "divine": 2.4,
    "dream": 1.5, "dreams": 1.5, "eager": 1.7, "earnest": 1.6, "ease": 1.4,
    "easy": 1.6, "effective": 1.6, "efficient": 1.6, "elegant": 2.1, "empower": 1.9,
    "empowered": 1.9, "encourage": 1.9, "encouraged": 1.9, "encouraging": 2.1, "endorse": 1.5,
    "endorsed": 1.5, "energetic": 1.9, "energized": 1.7, "engaging": 1.5, "enjoy": 2.2,
    "enjoyed": 2.2, "enjoying": 2.2, "enthusiasm": 2.3, "enthusiastic": 2.4, "excellence": 2.7,
    "excellent": 2.7, "excite": 2.2, "excited": 2.4, "excitement": 2.4, "exciting": 2.4,
    "fabulous": 2.7, "fair": 2.1, "fairness": 2.1, "faith": 1.9, "faithful": 2.2,
    "fantastic": 2.6, "favor": 1.7, "favorite": 2.0, "fearless": 1.9, "fine": 0.8,
    "flawless": 2.6, "flourish": 2.1, "fond": 1.9, "fortunate": 2.2, "forward": 0.9,
    "free": 2.3, "freedom": 3.2, "fresh": 1.3, "friend": 2.2, "friendly": 2.2,
    "friends": 2.2, "friendship": 2.5, "fun": 2.3, "gain": 1.4, "gained": 1.6,
    "generous": 2.3, "genius": 2.7, "gentle": 1.9, "genuine": 1.9, "gift": 1.9,
    "glad": 2.0, "glorious": 2.7, "glory": 2.4, "grace": 2.2, "graceful": 2.2,
    "gracious": 2.4, "grand": 2.1, "grateful": 2.6, "gratitude": 2.4, "greatest": 3.2,
    "grin": 1.8, "growth": 1.6, "happiness": 2.9, "happy": 2.7, "harmony": 2.2,
    "heal": 1.9, "healing": 2.0, "health": 1.7, "healthy": 2.0, "heaven": 2.6,
    "helpful": 1.8, "help": 1.7, "helped": 1.6, "helping": 1.7, "helps": 1.5,
    "hero": 2.6, "heroes": 2.5, "heroic": 2.6, "honest": 2.3, "honesty": 2.6,
    "honor": 2.4, "honored": 2.6, "hope": 1.9, "hopeful": 2.1, "hopes": 1.6,
    "hoping": 1.5, "hug": 2.1, "humane": 1.9, "humble": 1.4, "humor": 1.7,
    "ideal": 2.1, "importance": 1.2, "important": 1.1, "impress": 2.0, "impressed": 2.2,
    "impressive": 2.3, "improve": 1.8, "improved": 1.9, "improvement": 1.8, "improving": 1.8,
    "innovation": 1.6, "innovative": 1.8, "inspire": 2.3, "inspired": 2.3, "inspiring": 2.5,
    "integrity": 2.3, "intelligent": 2.4, "interested": 1.4, "interesting": 1.6, "invest": 1.1,
    "investment": 1.1, "joy": 2.8, "joyful": 2.9, "justice": 2.4, "keen": 1.4,
    "kind": 2.4, "kindness": 2.5, "kiss": 1.8, "laugh": 2.2, "laughed": 1.9,
    "laughing": 2.1, "laughter": 2.4, "lead": 1.2, "leader": 1.7, "leadership": 1.9,
    "liberty": 2.5, "like": 1.5, "liked": 1.6, "likes": 1.4, "lively": 1.9,
    "love": 3.2, "loved": 2.9, "lovely": 2.8, "loves": 2.7, "loving": 2.9,
    "loyal": 2.2, "lucky": 2.4, "magnificent": 3.1, "marvelous": 2.9, "master": 1.4,
    "mercy": 1.9, "merit": 1.6, "merry": 2.2, "miracle": 2.7, "motivated": 1.9,
    "nice": 1.8, "noble": 2.2, "nurture": 1.8, "okay": 0.9, "opportunities": 1.6,
    "opportunity": 1.6, "optimism": 2.2, "optimistic": 2.3, "outstanding": 2.9, "passion": 2.2,
    "passionate": 2.3, "peace": 2.5, "peaceful": 2.4, "perfect": 2.7, "play": 1.2,
    "played": 1.0, "playful": 2.0, "pleasant": 2.2, "please": 1.2, "pleased": 2.1,
    "pleasure": 2.5, "popular": 1.8, "positive": 2.1, "praise": 2.4, "praised": 2.3,
    "precious": 2.5, "prepared": 1.1, "pretty": 2.1, "pride": 1.9, "privilege": 1.8,
    "prize": 2.1, "productive": 1.8, "progress": 1.8, "promise": 1.4, "promising": 1.9,
    "prosper": 2.2, "prosperity": 2.4, "protect": 1.9, "protected": 1.8, "protecting": 1.7,
    "protection": 1.6, "protects": 1.6, "proud": 2.4, "proudly": 2.3, "radiant": 2.4,
    "readiness": 1.2, "ready": 1.1, "reassure": 1.5, "recover": 1.5, "recovered": 1.6,
    "recovery": 1.7, "refresh": 1.4, "relief": 1.9, "relieve": 1.6, "relieved": 2.0,
    "remarkable": 2.4, "rescue": 1.8, "rescued": 1.9, "resilience": 2.0, "resilient": 2.0,
    "resolve": 1.2, "respect": 2.1, "respected": 2.2, "responsible": 1.4, "restore": 1.4,
    "restored": 1.5, "reward": 2.0, "rewarded": 2.1, "rewarding": 2.2, "rich": 2.0,
    "right": 1.0, "rise": 1.1, "rising": 0.9, "robust": 1.3, "safe": 1.8,
    "safely": 1.7, "safer": 1.9, "safety": 1.6, "satisfied": 2.0, "save": 2.2,
    "saved": 2.1, "saves": 1.9, "saving": 1.8, "secure": 1.6, "secured": 1.6,
    "security": 1.3, "share": 1.2, "shared": 1.1, "shine": 1.8, "shining": 1.9,
    "smile": 2.4, "smiled": 2.2, "smiling": 2.5, "solid": 1.2, "solution": 1.4,
    "solutions": 1.3, "solve": 1.5, "solved": 1.7, "soothe": 1.6, "special": 1.8,
    "spectacular": 2.7, "splendid": 2.8, "stability": 1.4, "stable": 1.3, "star": 1.9,
    "strength": 2.0, "strengthen": 1.8, "strong": 2.3, "stronger": 2.3, "strongest": 2.5,
    "succeed": 2.2, "success": 2.7, "successful": 2.6, "superb": 2.9, "superior": 2.0,
    "support": 1.7, "supported": 1.8, "supporting": 1.7, "supportive": 2.1, "supports": 1.7,
    "sure": 1.3, "sweet": 2.2, "talent": 1.9, "talented": 2.2, "terrific": 2.7,
    "thank": 2.0, "thankful": 2.7, "thanks": 1.9, "thoughtful": 2.1, "thrilled": 2.8,
    "thrive": 2.2, "thriving": 2.3, "top": 1.6, "tremendous": 2.5, "triumph": 2.7,
    "true": 2.0, "trust": 2.1, "trusted": 2.3, "truth": 1.8, "unity": 2.0,
    "useful": 1.7, "valuable": 2.1, "value": 1.4, "valued": 1.9, "vibrant": 2.2,
    "victories": 2.3, "victory": 2.6, "vision": 1.3, "vital": 1.2, "warm": 1.8,
    "wealth": 2.0, "welcome": 2.0, "welcomed": 2.0, "wellness": 1.9, "win": 2.8,
    "winner": 2.8, "winning": 2.4, "wins": 2.7, "wisdom": 2.4, "wise": 2.3,
    "won": 2.7, "wonderful": 2.7, "worthy": 1.9, "wow": 2.8, "yeah": 1.2,
    "yes": 1.7, "young": 0.9, "zeal": 1.7, "zest": 1.6, "empathy": 1.9,
    # --- general negative vocabulary ---
    "abandon": -1.9, "abandoned": -2.0, "abuse": -3.2, "abused": -2.9, "abusive": -3.2,
    "afraid": -2.2, "aggression": -2.1, "aggressive": -2.0, "alarm": -1.4, "alarming": -1.9,
    "anger": -2.7, "angry": -2.3, "anguish": -2.9, "annoy": -1.7, "annoyed": -1.8,
    "annoying": -1.9, "anxiety": -2.0, "anxious": -1.9, "apathy": -1.2, "appalling": -2.7,
    "arrogant": -2.2, "ashamed": -2.1, "ass": -2.5, "assault": -2.9, "atrocious": -3.1,
    "attack": -2.1, "attacked": -2.1, "attacking": -2.0, "attacks": -1.9, "awful": -2.0,
    "backward": -0.9, "ban": -1.6, "banned": -1.8, "betray": -2.8, "betrayal": -2.9,
    "betrayed": -2.7, "bitter": -1.8, "blame": -1.7, "blamed": -1.6, "bleak": -1.9,
    "block": -1.1, "blocked": -1.3, "bloodshed": -3.2, "bomb": -2.6, "bombing": -2.9,
    "boring": -1.3, "broke": -1.5, "broken": -1.9, "brutal": -2.7, "bully": -2.6,
    "burden": -1.6, "catastrophe": -3.1, "catastrophic": -3.2, "chaos": -2.4, "chaotic": -2.2,
    "cheat": -2.4, "cheated": -2.4, "collapse": -2.0, "collapsed": -1.9, "complain": -1.5,
    "complained": -1.4, "concern": -1.1, "concerned": -1.2, "concerning": -1.3, "condemn": -2.2,
    "condemned": -2.3, "conflict": -1.7, "confused": -1.4, "confusion": -1.4, "corrupt": -2.9,
    "corruption": -2.9, "costly": -1.3, "crash": -1.9, "crime": -2.5, "crimes": -2.4,
    "criminal": -2.4, "criminals": -2.3, "crisis": -1.9, "critical": -1.1, "criticism": -1.5,
    "criticize": -1.6, "criticized": -1.6, "cruel": -2.9, "cruelty": -3.0, "cry": -2.0,
    "crying": -2.1, "damage": -1.9, "damaged": -1.9, "damaging": -2.0, "danger": -2.4,
    "dangerous": -2.3, "dead": -3.1, "deadly": -2.9, "death": -2.9, "deaths": -2.8,
    "debt": -1.6, "deceive": -2.3, "deception": -2.3, "defeat": -1.9, "defeated": -2.0,
    "deficit": -1.3, "degrade": -1.9, "delay": -1.2, "delayed": -1.2, "deny": -1.4,
    "denied": -1.5, "depressed": -2.6, "depression": -2.5, "despair": -2.7, "desperate": -1.9,
    "destroy": -2.6, "destroyed": -2.6, "destroying": -2.6, "destruction": -2.6, "destructive": -2.5,
    "devastate": -2.9, "devastated": -3.0, "devastating": -3.0, "die": -3.0, "died": -2.9,
    "dies": -2.8, "dying": -3.0, "dirty": -1.8, "disagree": -1.4, "disappoint": -2.1,
    "disappointed": -2.2, "disappointing": -2.2, "disappointment": -2.2, "disaster": -2.9, "disastrous": -3.0,
    "discrimination": -2.6, "disease": -2.1, "disgrace": -2.5, "disgraceful": -2.7, "disgust": -2.6,
    "disgusted": -2.6, "disgusting": -2.8, "dishonest": -2.5, "dismal": -2.2, "disorder": -1.7,
    "disrespect": -2.2, "disrupt": -1.4, "disruption": -1.4, "distress": -2.2, "distrust": -2.1,
    "divide": -1.2, "divided": -1.4, "divisive": -1.8, "doom": -2.4, "doubt": -1.3,
    "downturn": -1.5, "dread": -2.3, "dreadful": -2.8, "drought": -1.8, "dumb": -2.3,
    "emergency": -1.9, "enemies": -2.2, "enemy": -2.4, "enrage": -2.6, "evil": -3.3,
    "exhausted": -1.8, "exploit": -1.9, "exploited": -2.0, "fail": -2.3, "failed": -2.3,
    "failing": -2.2, "fails": -2.1, "failure": -2.5, "fake": -1.9, "fear": -2.2,
    "feared": -2.1, "fears": -1.9, "fight": -1.6, "fighting": -1.5, "filthy": -2.4,
    "fired": -1.8, "flood": -1.6, "fool": -1.9, "foolish": -1.9, "forced": -1.3,
    "fraud": -2.7, "frightening": -2.4, "frustrated": -2.1, "frustrating": -2.1, "frustration": -2.1,
    "furious": -2.7, "greed": -2.4, "greedy": -2.3, "grief": -2.7, "grim": -2.0,
    "guilt": -2.0, "guilty": -2.1, "harassment": -2.7, "harm": -2.4, "harmful": -2.4,
    "harsh": -1.9, "hate": -2.7, "hated": -2.6, "hateful": -2.9, "hates": -2.5,
    "hatred": -3.1, "havoc": -2.3, "hazard": -1.9, "hell": -2.4, "helpless": -2.0,
    "homophobia": -2.6, "hopeless": -2.4, "horrendous": -3.0, "horrific": -3.1, "horror": -2.7,
    "hostile": -2.2, "hostility": -2.3, "hurt": -2.2, "hurting": -2.3, "hurts": -2.1,
    "ignorance": -1.9, "ignorant": -2.1, "ignore": -1.3, "ignored": -1.5, "illegal": -2.1,
    "illness": -1.9, "inadequate": -1.6, "incompetent": -2.3, "inexcusable": -2.6, "inferior": -1.7,
    "inflation": -1.4, "injured": -2.0, "injury": -1.9, "injustice": -2.6, "insane": -1.7,
    "insult": -2.2, "insulting": -2.3, "invasion": -2.2, "jeopardy": -1.9, "kill": -3.7,
    "killed": -3.4, "killing": -3.4, "kills": -3.2, "lack": -1.3, "lame": -1.7,
    "lawsuit": -1.2, "lazy": -1.8, "liar": -2.7, "lie": -1.8, "lied": -2.1,
    "lies": -1.8, "lose": -1.9, "losing": -1.9, "loss": -1.9, "losses": -1.8,
    "lost": -1.7, "mad": -2.2, "malicious": -2.6, "mess": -1.6, "miserable": -2.7,
    "misery": -2.7, "misinformation": -2.0, "mislead": -2.1, "misleading": -2.2, "mistake": -1.7,
    "mistakes": -1.7, "mourn": -2.4, "murder": -3.5, "murdered": -3.4, "nasty": -2.5,
    "negative": -1.9, "neglect": -2.0, "neglected": -2.0, "nervous": -1.5, "nightmare": -2.7,
    "offend": -1.9, "offensive": -2.1, "oppose": -1.3, "opposed": -1.2, "opposition": -0.9,
    "oppression": -2.6, "outrage": -2.5, "outraged": -2.6, "outrageous": -2.4, "overdose": -2.6,
    "pain": -2.5, "painful": -2.4, "panic": -2.2, "pathetic": -2.5, "penalty": -1.4,
    "pollute": -2.1, "polluted": -2.1, "pollution": -2.0, "poor": -1.9, "poverty": -2.3,
    "problem": -1.4, "problems": -1.5, "propaganda": -1.9, "protest": -0.9, "punish": -2.0,
    "punished": -2.1, "racism": -3.1, "racist": -3.0, "rage": -2.6, "reckless": -2.1,
    "refuse": -1.4, "refused": -1.5, "regret": -1.9, "reject": -1.6, "rejected": -1.8,
    "resent": -1.9, "rigged": -2.1, "riot": -2.2, "risk": -1.3, "risks": -1.2,
    "risky": -1.5, "rotten": -2.4, "rude": -2.1, "ruin": -2.3, "ruined": -2.4,
    "sad": -2.1, "sadness": -2.4, "scandal": -2.2, "scared": -2.1, "scary": -2.2,
    "shame": -2.1, "shameful": -2.5, "shit": -2.6, "shocking": -1.9, "shortage": -1.5,
    "sick": -2.0, "sin": -1.9, "slaughter": -3.3, "smuggle": -1.9, "smuggling": -1.9,
    "sorrow": -2.5, "sorry": -1.1, "stolen": -2.1, "stop": -0.6, "storm": -1.2,
    "stress": -1.8, "stressed": -1.9, "struggle": -1.8, "struggling": -1.9, "stupid": -2.4,
    "suck": -2.2, "sucks": -2.1, "suffer": -2.4, "suffering": -2.5, "suffers": -2.3,
    "suicide": -3.3, "suspicious": -1.6, "terrible": -2.1, "terribly": -2.3, "terror": -2.8,
    "terrorism": -3.2, "terrorist": -3.0, "threat": -2.0, "threaten": -2.2, "threatened": -2.2,
    "threatening": -2.3, "threats": -2.0, "tired": -1.5, "toxic": -2.3, "tragedy": -2.9,
    "tragic": -2.8, "trapped": -2.0, "trauma": -2.5, "troubled": -1.9, "troubling": -1.9,
    "tyranny": -2.8, "ugly": -2.3, "unacceptable": -2.2, "unconstitutional": -1.9, "unfair": -2.2,
    "unhappy": -2.2, "unsafe": -2.1, "upset": -1.9, "urgent": -1.0, "useless": -1.9,
    "victim": -1.9, "victims": -1.9, "villain": -2.4, "violate": -2.1, "violated": -2.2,
    "violation": -2.1, "violence": -3.1, "violent": -2.9, "vulnerable": -1.5, "war": -2.9,
    "warfare": -2.7, "warning": -1.4, "waste": -1.8, "wasted": -1.9, "weak": -1.9,
    "weaken": -1.7, "weakness": -1.8, "wicked": -2.6, "worry": -1.8, "worried": -1.7,
    "worse": -2.1, "worst": -3.1, "worthless": -2.6, "wound": -2.1, "wounded": -2.2,
    "wreck": -2.1, "wrong": -2.1, "transphobia": -2.7, "biphobia": -2.6, "bigotry": -2.9,
    # --- emoticons (kept verbatim by the short-token rule) ---
    ":)": 2.0, ":(": -2.0, ":D": 2.5, ":-(": -1.9, ":-)": 1.9,
    ";)": 1.5, ":/": -1.2, ":p": 1.4, "<3": 2.7, ":'(": -2.3,
    # --- mixed / mild terms ---
    "alone": -1.0, "average": -0.4, "basic": 0.2, "big": 0.6, "casual": 0.4,
    "challenge": -0.5, "challenges": -0.6, "change": 0.4, "cheap": -0.8, "cold": -0.6,
    "curious": 1.2, "dear": 1.6, "deep": 0.4, "modest": 0.9, "extra": 0.6,
    "hard": -0.4, "heart": 1.7, "huge": 0.8, "low": -0.8, "matter": 0.4,
    "matters": 0.6, "new": 0.7, "odd": -0.7, "old": -0.2, "open": 0.8,
    "plain": -0.1, "quick": 0.6, "quiet": -0.2, "raw": -0.5, "serious": -0.9,
    "seriously": -0.9, "severe": -1.8, "sharp": -0.4, "simple": 0.6, "slow": -0.9,
    "small": -0.3, "soft": 0.7, "steady": 0.9, "tough": -0.8, "trivial": -0.4,
    "unusual": -0.3, "warmth": 1.9, "wild": -0.3, "sloppy": -1.5, "shaky": -1.2,
}


def main() -> None:
    here = os.path.dirname(os.path.abspath(__file__))
    out_path = os.path.normpath(os.path.join(here, "..", "..", "data", "vader_lexicon.txt"))
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        for token in sorted(ENTRIES):
            valence = ENTRIES[token]
            if abs(valence) > 4.0:
                raise SystemExit(f"valence out of range for {token!r}")
            fh.write(f"{token}\t{valence}\n")
    print(f"wrote {len(ENTRIES)} entries to {out_path}")


if __name__ == "__main__":
    main()
