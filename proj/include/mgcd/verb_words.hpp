#pragma once

#include <array>

namespace mgcd {

inline constexpr const char* kVerbLexiconVersion = "verbs-1";

// Base forms of common English verbs plus software vocabulary; lookups apply
// inflection stripping and suffix fallbacks on top of this set.
inline constexpr std::array<const char*, 1220> kVerbWords = {
    "abandon", "abort", "absorb", "accept", "access", "accommodate", "accompany",
    "accomplish", "accumulate", "achieve", "acknowledge", "acquire", "act", "activate",
    "adapt", "add", "address", "adjust", "administer", "admit", "adopt", "advance",
    "advertise", "advise", "affect", "afford", "aggregate", "agree", "aim", "alert",
    "align", "alloc", "allocate", "allow", "alter", "amend", "analyze", "analyse",
    "anchor", "animate", "announce", "annotate", "answer", "anticipate", "append",
    "apply", "appoint", "appreciate", "approach", "approve", "approximate", "archive",
    "argue", "arise", "arrange", "arrive", "ask", "assemble", "assert", "assess",
    "assign", "assist", "associate", "assume", "assure", "attach", "attack", "attempt",
    "attend", "attract", "audit", "authenticate", "authorize", "automate", "avoid",
    "await", "awake", "award", "back", "backup", "balance", "ban", "base", "batch",
    "bear", "beat", "become", "begin", "behave", "believe", "belong", "benchmark",
    "bend", "benefit", "bet", "bind", "bite", "blame", "blend", "block", "blow",
    "blur", "boil", "boost", "borrow", "bother", "bounce", "bound", "branch", "break",
    "breathe", "bridge", "bring", "broadcast", "browse", "brush", "buffer", "build",
    "bump", "burn", "burst", "bury", "buy", "bypass", "cache", "calculate", "calibrate",
    "call", "cancel", "capture", "care", "carry", "cast", "catch", "categorize",
    "cause", "cease", "center", "chain", "challenge", "change", "charge", "chase",
    "chat", "cheat", "check", "checkout", "choose", "chop", "chunk", "claim", "clamp",
    "clarify", "classify", "clean", "cleanup", "clear", "climb", "clip", "clone",
    "close", "cluster", "coalesce", "collapse", "collect", "combine", "come", "comment",
    "commit", "communicate", "compact", "compare", "compensate", "compete", "compile",
    "complain", "complete", "compose", "compress", "compute", "concatenate", "concat",
    "conclude", "concur", "condense", "conduct", "configure", "confirm", "conflict",
    "conform", "confuse", "connect", "consider", "consist", "consolidate", "construct",
    "consult", "consume", "contact", "contain", "continue", "contract", "contribute",
    "control", "convert", "convey", "convince", "cook", "cool", "coordinate", "cope",
    "copy", "correct", "correlate", "correspond", "cost", "count", "cover", "crack",
    "crash", "crawl", "create", "credit", "criticize", "crop", "cross", "cry", "curl",
    "customize", "cut", "cycle", "damage", "dance", "deal", "debate", "debug", "decay",
    "decide", "declare", "decline", "decode", "decompose", "decompress", "decorate",
    "decrease", "decrement", "decrypt", "dedicate", "deduce", "default", "defeat",
    "defend", "defer", "define", "delay", "delegate", "delete", "deliver", "demand",
    "demonstrate", "denote", "deny", "depend", "deploy", "deprecate", "derive",
    "descend", "describe", "deserialize", "deserve", "design", "designate", "destroy",
    "detach", "detect", "determine", "develop", "deviate", "devise", "diagnose",
    "die", "differ", "differentiate", "dig", "digest", "direct", "disable",
    "disagree", "disallow", "disappear", "discard", "discharge", "disconnect",
    "discover", "discuss", "dismiss", "dispatch", "display", "dispose", "disprove",
    "dispute", "disrupt", "dissolve", "distinguish", "distribute", "dive", "divide",
    "do", "document", "dominate", "double", "doubt", "download", "draft", "drag",
    "drain", "draw", "dream", "dress", "drift", "drink", "drive", "drop", "dump",
    "duplicate", "earn", "eat", "echo", "edit", "educate", "elaborate", "elect",
    "eliminate", "embed", "emerge", "emit", "emphasize", "employ", "empty", "emulate",
    "enable", "encapsulate", "enclose", "encode", "encounter", "encourage", "encrypt",
    "end", "endorse", "enforce", "engage", "engineer", "enhance", "enjoy", "enlarge",
    "enqueue", "enrich", "enroll", "ensure", "enter", "enumerate", "equal", "equip",
    "erase", "escape", "establish", "estimate", "evaluate", "evict", "evolve",
    "examine", "exceed", "exchange", "exclude", "execute", "exercise", "exhaust",
    "exist", "exit", "expand", "expect", "expire", "explain", "explore", "export",
    "expose", "express", "extend", "extract", "face", "factor", "fail", "fall",
    "fault", "favor", "feed", "feel", "fetch", "fight", "fill", "filter", "finalize",
    "find", "finish", "fire", "fit", "fix", "flag", "flash", "flatten", "flip",
    "float", "flood", "flow", "flush", "fly", "focus", "fold", "follow", "force",
    "forecast", "forget", "forgive", "fork", "form", "format", "formulate", "forward",
    "frame", "free", "freeze", "fulfill", "function", "fund", "gain", "gather",
    "generalize", "generate", "get", "give", "glance", "go", "govern", "grab",
    "grant", "graph", "grasp", "greet", "grep", "grind", "grip", "group", "grow",
    "guarantee", "guard", "guess", "guide", "hack", "halt", "handle", "hang",
    "happen", "harm", "hash", "hate", "have", "head", "heal", "hear", "heat", "help",
    "hide", "highlight", "hint", "hire", "hit", "hold", "hook", "hop", "hope", "host",
    "hover", "hurry", "hurt", "identify", "ignore", "illustrate", "imagine",
    "imitate", "impact", "implement", "imply", "import", "impose", "improve",
    "include", "incorporate", "increase", "increment", "index", "indicate", "infer",
    "inflate", "influence", "inform", "inherit", "init", "initialize", "initiate",
    "inject", "inline", "input", "insert", "insist", "inspect", "install",
    "instantiate", "instruct", "integrate", "intend", "intercept", "interest",
    "interleave", "interpolate", "interpret", "interrupt", "intersect", "introduce",
    "invalidate", "invent", "invert", "invest", "investigate", "invite", "invoke",
    "involve", "isolate", "issue", "iterate", "join", "judge", "jump", "justify",
    "keep", "key", "kick", "kill", "kiss", "knock", "know", "label", "lack", "land",
    "last", "latch", "laugh", "launch", "lay", "layer", "lead", "leak", "lean",
    "leap", "learn", "leave", "lend", "let", "level", "lie", "lift", "light", "like",
    "limit", "line", "link", "lint", "list", "listen", "live", "load", "locate",
    "lock", "log", "look", "lookup", "loop", "lose", "love", "lower", "maintain",
    "make", "manage", "manipulate", "map", "mark", "marshal", "mask", "match",
    "materialize", "matter", "maximize", "mean", "measure", "meet", "memoize",
    "mention", "merge", "migrate", "mind", "minimize", "mirror", "miss", "mix",
    "mock", "model", "modify", "monitor", "mount", "move", "multiply", "mutate",
    "name", "navigate", "need", "negate", "negotiate", "nest", "normalize", "note",
    "notice", "notify", "null", "number", "obey", "object", "observe", "obtain",
    "occur", "offer", "offload", "offset", "omit", "open", "operate", "optimize",
    "order", "organize", "orient", "output", "overflow", "overlap", "overload",
    "override", "overwrite", "owe", "own", "pack", "package", "pad", "page", "paint",
    "pair", "parallelize", "parse", "partition", "pass", "paste", "patch", "pause",
    "pay", "peek", "perform", "permit", "persist", "persuade", "pick", "pin", "ping",
    "pipe", "pivot", "place", "plan", "play", "plot", "pluck", "plug", "point",
    "poll", "pop", "populate", "position", "possess", "post", "postpone", "pour",
    "power", "practice", "precede", "precompute", "predict", "prefer", "prefetch",
    "prefix", "preload", "prepare", "prepend", "present", "preserve", "press",
    "pretend", "prevent", "preview", "print", "prioritize", "probe", "proceed",
    "process", "produce", "profile", "program", "progress", "prohibit", "project",
    "promise", "promote", "prompt", "propagate", "propose", "protect", "prove",
    "provide", "prune", "publish", "pull", "pulse", "pump", "punch", "purchase",
    "purge", "purify", "pursue", "push", "put", "qualify", "quantify", "query",
    "question", "queue", "quit", "quote", "race", "raise", "randomize", "range",
    "rank", "rate", "reach", "react", "read", "realize", "rearrange", "reason",
    "rebase", "rebalance", "reboot", "rebuild", "recalculate", "recall", "receive",
    "recheck", "recognize", "recommend", "recompile", "recompute", "reconcile",
    "reconnect", "reconstruct", "record", "recover", "recreate", "recurse", "recycle",
    "redirect", "rediscover", "redo", "reduce", "refactor", "refer", "refine",
    "reflect", "refresh", "refuse", "regard", "regenerate", "register", "regress",
    "reject", "relate", "relax", "release", "reload", "relocate", "rely", "remain",
    "remap", "remember", "remind", "remove", "rename", "render", "renew", "reorder",
    "repair", "reparse", "repeat", "rephrase", "replace", "replay", "replicate",
    "reply", "report", "reposition", "represent", "reproduce", "request", "require",
    "rerun", "rescale", "reschedule", "research", "resemble", "reserve", "reset",
    "reshape", "reside", "resize", "resolve", "resort", "respect", "respond",
    "restart", "restore", "restrict", "result", "resume", "retain", "rethrow",
    "retire", "retrieve", "retry", "return", "reuse", "reveal", "reverse", "revert",
    "review", "revise", "revisit", "revoke", "reward", "rewind", "rework", "rewrite",
    "ride", "ring", "rise", "risk", "roll", "rollback", "rotate", "round", "route",
    "rub", "run", "sample", "sanitize", "satisfy", "save", "say", "scale", "scan",
    "scatter", "schedule", "scope", "score", "scramble", "scrape", "scratch",
    "scroll", "seal", "search", "secure", "see", "seed", "seek", "seem", "segment",
    "select", "sell", "send", "separate", "sequence", "serialize", "serve", "set",
    "settle", "setup", "shake", "shape", "share", "shift", "shine", "ship", "shoot",
    "shorten", "show", "shrink", "shuffle", "shut", "sign", "signal", "simplify",
    "simulate", "sing", "sink", "sit", "size", "skip", "slee", "sleep", "slice",
    "slide", "slow", "smell", "smile", "smooth", "snap", "sniff", "solve", "sort",
    "sound", "span", "spawn", "speak", "specialize", "specify", "spell", "spend",
    "spill", "spin", "split", "sponsor", "spread", "spring", "sprint", "squash",
    "squeeze", "stabilize", "stack", "stage", "stand", "standardize", "stare",
    "start", "starve", "stash", "state", "stay", "steal", "steer", "stem", "step",
    "stick", "stop", "store", "stream", "strengthen", "stress", "stretch", "strike",
    "strip", "strive", "stub", "study", "stuff", "subclass", "submit", "subscribe",
    "subtract", "succeed", "suffer", "suggest", "suit", "sum", "summarize",
    "supervise", "supply", "support", "suppose", "suppress", "surround", "survive",
    "suspect", "suspend", "sustain", "swallow", "swap", "swear", "sweep", "swim",
    "swing", "switch", "sync", "synchronize", "synthesize", "tag", "tail", "take",
    "talk", "target", "taste", "teach", "tear", "tell", "tend", "terminate", "test",
    "think", "threaten", "throttle", "throw", "tick", "tie", "tighten", "time",
    "toggle", "tokenize", "tolerate", "touch", "trace", "track", "trade", "train",
    "transcode", "transfer", "transform", "translate", "transmit", "transpose",
    "trap", "travel", "traverse", "treat", "trigger", "trim", "trip", "truncate",
    "trust", "try", "tune", "turn", "tweak", "type", "uncover", "underflow",
    "undergo", "underline", "understand", "undo", "unfold", "unify", "uninstall",
    "unite", "unload", "unlock", "unmarshal", "unmask", "unmount", "unpack",
    "unregister", "unroll", "unset", "unsubscribe", "untie", "unwind", "unwrap",
    "unzip", "update", "upgrade", "upload", "uppercase", "urge", "use", "validate",
    "value", "vanish", "vary", "vectorize", "verify", "version", "view", "visit",
    "visualize", "vote", "wait", "wake", "walk", "want", "warm", "warn", "wash",
    "waste", "watch", "wave", "weaken", "wear", "weigh", "weight", "welcome", "whiten",
    "widen", "win", "wind", "wipe", "wish", "withdraw", "wonder", "work", "worry",
    "wrap", "write", "yield", "zero", "zip", "zoom", "abide", "ablate", "abolish",
    "abstain", "abstract", "accelerate", "accent", "accord", "account", "accuse",
    "ache", "acquaint", "adhere", "adjoin", "admire", "advocate", "aid", "air",
    "alarm", "alias", "alleviate", "allot", "ally", "amaze", "amount", "amplify",
    "amuse", "anger", "angle", "anneal", "annoy", "annul", "appeal", "appear",
    "applaud", "appraise", "apprehend", "arc", "arm", "arrest", "ascend", "ascribe",
    "aspire", "assail", "astonish", "atone", "attain", "attest", "attribute",
    "augment", "authored", "avail", "avenge", "average", "awaken", "babble", "bake",
    "bargain", "bark", "bash", "bat", "bathe", "batter", "beam", "bean", "beckon",
    "beg", "behold", "belittle", "bellow", "belt", "bemoan", "bestow", "better",
    "beware", "bias", "bid", "bill", "bisect", "blast", "blaze", "bleed", "bless",
    "blink", "bloat", "bloom", "blossom", "bluff", "blunder", "board", "boast",
    "bob", "bolster", "bolt", "bomb", "bond", "bone", "book", "boom", "bootstrap",
    "bore", "bottle", "bow", "box", "brace", "brag", "braid", "brake", "brand",
    "brave", "breach", "breed", "brew", "brief", "brighten", "broaden", "broker",
    "bruise", "brute", "bubble", "buckle", "bud", "budget", "bug", "bulge", "bundle",
    "bunch", "burden", "bustle", "butter", "button", "buzz", "cab", "cage", "cake",
    "calm", "camp", "canonicalize", "cap", "capitalize", "captivate", "carve",
    "catalog", "cater", "caution", "cave", "celebrate", "cement", "censor", "chant",
    "char", "characterize", "charm", "chart", "charter", "cheer", "cherish", "chew",
    "chill", "chime", "chip", "choke", "chronicle", "churn", "circle", "circulate",
    "cite", "civilize", "clap", "clash", "clasp", "cleanse", "clench", "click",
    "cling", "clog", "cloud", "clutch", "coach", "coat", "coax", "code", "coerce",
    "coincide", "collaborate", "collide", "color", "comb", "comfort", "command",
    "commence", "commend", "compel", "compile_time", "comply", "compound",
    "comprehend", "comprise", "compromise", "conceal", "concede", "conceive",
    "concentrate", "concern", "condemn", "condition", "confer", "confess", "confide",
    "confine", "confront", "congratulate", "conjure", "connote", "conquer",
    "consent", "conserve", "console", "conspire", "constitute", "constrain",
    "contend", "contest", "contradict", "contrast", "convene", "converge",
    "converse", "convict", "copyright", "corner", "couple", "court", "crave",
    "credit_check", "creep", "cripple", "criticise", "crouch", "crowd", "crown",
    "cruise", "crumble", "crunch", "crush", "cube", "cue", "cull", "cultivate",
    "cure", "curb", "curse", "curve", "cushion", "dab", "dampen", "dare", "darken",
    "dart", "dash", "date", "dawn", "daze", "deactivate", "deaden", "deadlock",
    "deafen", "dealloc", "deallocate", "debit", "decap", "decelerate", "decipher",
    "deck", "dedup", "deduplicate", "deem", "deepen", "deface", "defame", "defect",
    "deflate", "deflect", "defragment", "defray", "degrade", "deify", "deject",
    "delight", "delimit", "delta", "delve", "demote", "demux", "depart", "depict",
    "deplete", "deplore", "deport", "depose", "deposit", "deprive", "dequeue",
    "derail", "desert", "despair", "despise", "detain", "deter", "dethrone",
    "detonate", "devote", "devour", "dice", "dictate", "diff", "diffuse", "dilute",
    "dim", "diminish", "dine", "dip", "disarm", "disband", "discern", "discipline",
    "disclose", "discount", "discourage", "disdain", "disgrace", "disguise",
    "disgust", "dishonor", "disinfect", "dislike", "dislodge", "dismantle",
    "dismount", "disobey", "disown", "dispel", "dispense", "disperse", "displace",
    "disregard", "dissect", "dissent", "dissipate", "dissuade", "distill",
    "distort", "distract", "distrust", "disturb", "ditch", "divert", "divulge",
    "dock", "dodge", "dot", "dote", "downcast", "downgrade", "downsample", "doze",
    "drench", "drill", "drip", "drown", "drum", "dry", "duck", "duel", "dwell",
    "dye", "ease", "eavesdrop", "ebb", "eclipse", "economize", "edge", "eject",
    "elapse", "elevate", "elicit", "elide", "elude", "emanate", "emancipate",
    "embark", "embarrass", "embody", "embrace", "emend", "emigrate", "empower",
    "enact", "enchant", "encircle", "encompass", "endanger", "endear", "endeavor",
    "endure", "energize", "engrave", "engross", "engulf", "enlighten", "enlist",
    "enliven", "enrage", "enrapture", "enslave", "ensue", "entail", "entangle",
    "entertain", "enthrall", "entice", "entitle", "entrust", "envelop", "envision",
    "envy", "epitomize", "equate", "eradicate", "erect", "erode", "err", "erupt",
    "escalate", "eschew", "escort", "espouse", "etch", "evacuate", "evade",
    "evaporate", "evoke", "exacerbate", "exaggerate", "exalt", "excavate", "excel",
    "excite", "exclaim", "excuse", "exempt", "exert", "exhale", "exhibit", "exile",
    "exonerate", "expel", "expedite", "experience", "experiment", "expand_all",
    "explode", "exploit", "expound", "expunge", "extinguish", "extol", "extort",
    "extrapolate", "exude", "eye", "fabricate", "facilitate", "fade", "falsify",
    "falter", "fancy", "fantasize", "fare", "farm", "fascinate", "fast", "fasten",
    "fathom", "fatten", "fear", "feast", "feature", "fence", "fend", "ferment",
    "ferry", "fester", "fiddle", "fidget", "field", "file", "finance", "fine",
    "fingerprint", "firm", "fish", "fixate", "fizzle", "flail", "flake", "flank",
    "flare", "flee", "fling", "flicker", "flinch", "flock", "flog", "flop",
    "flourish", "flout", "flutter", "foam", "foil", "fool", "forbid", "forge",
    "forsake", "fortify", "foster", "foul", "found", "fracture", "fragment",
    "fray", "frequent", "fret", "frighten", "frolic", "frown", "fry", "fuel",
    "fumble", "furnish", "fuse", "fuss", "gallop", "gamble", "gage", "gauge",
    "gaze", "gear", "gel", "gesture", "glean", "glide", "glimpse", "glitter",
    "gloat", "glow", "glue", "gnaw", "gobble", "gossip", "gouge", "grace", "grade",
    "graduate", "graft", "grapple", "grate", "gratify", "gravitate", "graze",
    "grieve", "grin", "groan", "groom", "groove", "grope", "growl", "grudge",
    "grumble", "grunt", "gulp", "gush", "gut", "gyrate", "haggle", "hail",
    "hallucinate", "hamper", "hand", "handicap", "harass", "harbor", "harden",
    "harmonize", "harness", "harvest", "hasten", "hatch", "haul", "haunt", "heap",
    "hearten", "heave", "hedge", "heed", "hem", "herd", "hesitate", "hew", "hiccup",
    "hike", "hinder", "hinge", "hiss", "hoard", "hoist", "hone", "honor", "hoot",
    "horrify", "hound", "house", "howl", "huddle", "hug", "hum", "humble",
    "humiliate", "hunt", "hurl", "hush", "hustle", "hydrate", "hype", "hypothesize",
    "idle", "ignite", "illuminate", "immerse", "immigrate", "immunize", "impair",
    "impart", "impeach", "impede", "impersonate", "implant", "implicate", "implore",
    "import_all", "impress", "imprint", "imprison", "improvise", "inaugurate",
    "incite", "incline", "incur", "indent", "indulge", "infect", "infest",
    "infiltrate", "inflict", "infringe", "infuriate", "ingest", "inhabit", "inhale",
    "inhibit", "injure", "innovate", "inquire", "inscribe", "inspire", "instill",
    "insulate", "insult", "insure", "intensify", "interact", "interchange",
    "interfere", "interject", "intern", "interrogate", "intertwine", "intervene",
    "interview", "intimidate", "intrigue", "intrude", "intuit", "inundate", "invade",
    "inventory", "irritate", "itemize", "jab", "jam", "jar", "jeer", "jerk", "jest",
    "jog", "jolt", "jostle", "jot", "journey", "juggle", "jumble", "keynote",
    "kindle", "kneel", "knit", "labor", "lag", "lament", "languish", "lash", "lasso",
    "lather", "lavish", "laze", "leach", "leapfrog", "lease", "leash", "lecture",
    "lessen", "leverage", "levitate", "levy", "liberate", "license", "lighten",
    "liken", "linger", "liquidate", "litter", "loathe", "lobby", "lodge", "loiter",
    "long", "loom", "loosen", "loot", "lounge", "lower_bound", "lull", "lumber",
    "lump", "lunge", "lurch", "lure", "lurk", "magnify", "mail", "maim", "mandate",
    "mangle", "manifest", "manufacture", "march", "marinate", "market", "marry",
    "marvel", "mash", "massage", "master", "meddle", "mediate", "meditate", "melt",
    "mend", "mentor", "meow", "mesh", "mess", "microbenchmark", "mimic", "mince",
    "mingle", "minify", "mint", "misbehave", "miscalculate", "mishandle",
    "misinterpret", "mislead", "mismatch", "misplace", "misread", "mistake",
    "misuse", "mitigate", "moan", "mobilize", "modulate", "moisten", "mold",
    "mourn", "mow", "muddle", "muffle", "mull", "multiplex", "mumble", "munch",
    "murmur", "muse", "muster", "mutter", "muzzle", "mystify", "nag", "nail",
    "narrate", "narrow", "nudge", "nullify", "nurse", "nurture", "obfuscate",
    "oblige", "obscure", "obsess", "obstruct", "occupy", "offend", "officiate",
    "ooze", "oppose", "oppress", "opt", "orbit", "orchestrate", "ordain", "originate",
    "ornament", "oscillate", "oust", "outgrow", "outlast", "outline", "outlive",
    "outnumber", "outpace", "outperform", "outrun", "outshine", "outsource",
    "outweigh", "overcome", "overdo", "overestimate", "overhaul", "overhear",
    "overpower", "overreact", "overrule", "overrun", "oversee", "overshadow",
    "oversleep", "overstate", "overtake", "overthrow", "overturn", "overuse",
    "overwhelm", "paginate", "pamper", "pan", "panic", "parade", "paralyze",
    "paraphrase", "parch", "pardon", "park", "parrot", "participate", "pat",
    "patrol", "patronize", "pave", "paw", "peck", "pedal", "peel", "peer", "pen",
    "penalize", "penetrate", "pepper", "perceive", "perch", "perfect", "perforate",
    "perish", "perk", "permeate", "perpetuate", "perplex", "persevere", "personalize",
    "perspire", "pertain", "perturb", "peruse", "pester", "petition", "philosophize",
    "phone", "photograph", "phrase", "pickle", "picture", "pierce", "pile", "pilot",
    "pinch", "pinpoint", "pioneer", "pique", "pitch", "pity", "placate", "plague",
    "plant", "plead", "please", "pledge", "plow", "plummet", "plunge", "poach",
    "poison", "poke", "polish", "ponder", "pool", "pore", "portray", "pose",
    "postulate", "pounce", "pound", "praise", "prance", "preach", "precipitate",
    "preclude", "predate", "predominate", "preempt", "preface", "prejudice",
    "premiere", "preoccupy", "prescribe", "presume", "prevail", "prey", "price",
    "prick", "pride", "prime", "proclaim", "procrastinate", "procure", "prod",
    "profess", "proffer", "prolong", "pronounce", "proofread", "prop", "prophesy",
    "proportion", "proposition", "prosecute", "prosper", "protest", "protrude",
    "provoke", "prowl", "pry", "publicize", "pucker", "puff", "pulverize", "pummel",
    "puncture", "punish", "purr", "puzzle", "quadruple", "quake", "qualify_all",
    "quarrel", "quash", "quell", "quench", "quibble", "quicken", "quiet", "quiver",
    "quiz", "radiate", "raid", "rail", "rain", "rally", "ram", "ramble", "rampage",
    "ransack", "rant", "rap", "rattle", "ravage", "rave", "ravish", "readjust",
    "ream", "reap", "rebel", "rebuff", "rebuke", "rebut", "recede", "recite",
    "reckon", "reclaim", "recline", "recoil", "recollect", "recount", "recoup",
    "recruit", "rectify", "recuperate", "redeem", "redefine", "redeploy", "redesign",
    "redistribute", "redouble", "redraw", "reel", "reenter", "reestablish",
    "reexamine", "refill", "refinance", "refit", "reforge", "reform", "refrain",
    "refuel", "refund", "refurbish", "refute", "regain", "regale", "regret",
    "regroup", "regulate", "rehabilitate", "rehearse", "reign", "reimburse", "rein",
    "reinforce", "reinstate", "reiterate", "rejoice", "rejoin", "rejuvenate",
    "rekindle", "relapse", "relay", "relearn", "relent", "relinquish", "relish",
    "remark", "remedy", "reminisce", "remit", "remodel", "remount", "renounce",
    "renovate", "rent", "reopen", "repay", "repeal", "repel", "repent", "rephase",
    "repossess", "reprimand", "reproach", "repudiate", "repulse", "reroute",
    "resent", "resign", "resist", "resound", "restock", "restrain", "resurface",
    "resurrect", "resuscitate", "retaliate", "retell", "rethink", "retort",
    "retract", "retrain", "retreat", "retrofit", "reunite", "revamp", "revel",
    "revere", "reverberate", "revive", "revolt", "revolve", "rhyme", "rid", "ridicule",
    "riffle", "rig", "rinse", "rip", "ripen", "ripple", "rival", "roam", "roar",
    "roast", "rob", "rock", "romp", "roost", "root", "rope", "rot", "rouse", "rove",
    "row", "ruin", "rule", "rumble", "rummage", "rumor", "rupture", "rush", "rust",
    "rustle", "sabotage", "sack", "sacrifice", "sadden", "saddle", "sail", "salute",
    "salvage", "sanctify", "sanction", "sand", "sap", "savor", "saw", "scald",
    "scar", "scare", "scavenge", "scent", "scheme", "scold", "scoop", "scoot",
    "scorch", "scorn", "scour", "scout", "scowl", "scrub", "sculpt", "scurry",
    "season", "secede", "seclude", "second", "sect", "seduce", "seep", "seethe",
    "seize", "sense", "sentence", "sever", "sew", "shackle", "shade", "shadow",
    "shatter", "shave", "shed", "shelter", "shelve", "shepherd", "shield", "shimmer",
    "shiver", "shock", "shove", "shovel", "showcase", "shred", "shriek", "shrug",
    "shudder", "shun", "shuttle", "sidestep", "sift", "sigh", "signify", "silence",
    "silhouette", "simmer", "sip", "siphon", "situate", "sizzle", "sketch", "skew",
    "skid", "skim", "skirt", "skyrocket", "slam", "slander", "slant", "slap",
    "slash", "slay", "slim", "sling", "slink", "slip", "slit", "slither", "slouch",
    "slump", "slur", "smash", "smear", "smite", "smoke", "smolder", "smother",
    "smuggle", "snag", "snake", "snarl", "snatch", "sneak", "sneer", "sneeze",
    "snip", "snoop", "snooze", "snore", "snub", "soak", "soar", "sob", "sober",
    "socialize", "soften", "soil", "solder", "solicit", "soothe", "sparkle",
    "spear", "spearhead", "speculate", "speed", "spike", "spiral", "spite", "splash",
    "splice", "splinter", "spoil", "sponge", "spoof", "spot", "spout", "sprawl",
    "spray", "sprinkle", "sprout", "spur", "spurn", "sputter", "spy", "squander",
    "square", "squat", "squeal", "squint", "squirm", "squirt", "stab", "staff",
    "stagger", "stain", "stake", "stalk", "stall", "stamp", "stampede", "staple",
    "startle", "stationed", "steady", "steam", "steepen", "stereotype", "stifle",
    "stipulate", "stir", "stitch", "stockpile", "stoke", "stomp", "stoop",
    "straddle", "straighten", "strain", "strand", "strangle", "stratify", "stray",
    "streak", "streamline", "strengthen_all", "stride", "stroll", "structure",
    "struggle", "strut", "stumble", "stun", "stunt", "stutter", "style", "subdue",
    "subject", "sublet", "submerge", "subordinate", "subpoena", "subside",
    "subsidize", "substantiate", "substitute", "subsume", "subvert", "suck",
    "sue", "suffice", "suffocate", "sugar", "summon", "surge", "surmise", "surmount",
    "surpass", "surrender", "survey", "swamp", "swarm", "sway", "sweat", "sweeten",
    "swell", "swerve", "swindle", "swirl", "swoop", "symbolize", "sympathize",
    "systematize", "tabulate", "tackle", "taint", "tally", "tame", "tamper", "tan",
    "tangle", "tap", "taper", "tarnish", "taunt", "tax", "tease", "telephone",
    "televise", "temper", "tempt", "terrify", "testify", "thank", "thaw", "theorize",
    "thicken", "thin", "thirst", "thrash", "thread", "thrill", "thrive", "thrust",
    "thud", "thump", "thunder", "thwart", "tickle", "tilt", "tinker", "tint", "tip",
    "tiptoe", "tire", "toast", "toil", "toll", "top", "topple", "torment", "toss",
    "total", "totter", "tour", "tow", "tower", "trail", "trample", "transact",
    "transcend", "transcribe", "transition", "transplant", "transport", "tread",
    "treasure", "trek", "tremble", "trespass", "trickle", "triple", "triumph",
    "trot", "trouble", "trounce", "trudge", "trumpet", "tuck", "tug", "tumble",
    "tunnel", "tutor", "twinkle", "twirl", "twist", "twitch", "unbind", "unblock",
    "uncache", "unchain", "unclog", "uncompress", "underestimate", "undermine",
    "underpin", "underscore", "undertake", "undress", "unearth", "unhook", "unite_all",
    "unleash", "unlink", "unnerve", "unplug", "unravel", "unseat", "unsettle",
    "untangle", "unveil", "uphold", "uplift", "uproot", "upsample", "upset", "usher",
    "usurp", "utilize", "utter", "vacate", "vaccinate", "vacuum", "vault", "veer",
    "veil", "vent", "ventilate", "venture", "vest", "vet", "veto", "vex", "vibrate",
    "vindicate", "violate", "voice", "void", "volunteer", "vouch", "vow", "wade",
    "wager", "wail", "waive", "wander", "wane", "ward", "ware", "waver", "weave",
    "wed", "weed", "weep", "weld", "wheeze", "whine", "whip", "whirl", "whisk",
    "whisper", "whistle", "whittle", "wield", "wiggle", "wilt", "wince", "winden",
    "wink", "withhold", "withstand", "witness", "wobble", "woo", "worship", "wound",
    "wrangle", "wreck", "wrench", "wrestle", "wring", "wrinkle", "yank", "yawn",
    "yearn", "yell", "yelp", "zap", "zigzag", "zone"};

}  // namespace mgcd
