#include "textgen.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <random>

namespace textgen {
namespace {

struct Verb {
    const char* base;  // plural present / infinitive; null = never bare
    const char* third; // 3rd singular present; null = class without -s use
    const char* past;
    const char* ing;   // null = class without progressive use
};

// High-frequency verbs, mostly irregular pasts so they stay out of the -ed
// signatures; the regular ones among them are frequent enough to stay atomic.
const Verb kCoreVerbs[] = {
    {"say", "says", "said", "saying"},       {"make", "makes", "made", "making"},
    {"go", "goes", "went", "going"},         {"take", "takes", "took", "taking"},
    {"come", "comes", "came", "coming"},     {"see", "sees", "saw", "seeing"},
    {"know", "knows", "knew", "knowing"},    {"get", "gets", "got", "getting"},
    {"give", "gives", "gave", "giving"},     {"find", "finds", "found", "finding"},
    {"think", "thinks", "thought", "thinking"}, {"tell", "tells", "told", "telling"},
    {"show", "shows", "showed", "showing"},  {"leave", "leaves", "left", "leaving"},
    {"feel", "feels", "felt", "feeling"},    {"put", "puts", "put", "putting"},
    {"bring", "brings", "brought", "bringing"}, {"begin", "begins", "began", "beginning"},
    {"keep", "keeps", "kept", "keeping"},    {"hold", "holds", "held", "holding"},
    {"write", "writes", "wrote", "writing"}, {"stand", "stands", "stood", "standing"},
    {"hear", "hears", "heard", "hearing"},   {"let", "lets", "let", "letting"},
    {"mean", "means", "meant", "meaning"},   {"set", "sets", "set", "setting"},
    {"meet", "meets", "met", "meeting"},     {"run", "runs", "ran", "running"},
    {"pay", "pays", "paid", "paying"},       {"sit", "sits", "sat", "sitting"},
    {"speak", "speaks", "spoke", "speaking"}, {"lead", "leads", "led", "leading"},
    {"read", "reads", "read", "reading"},    {"grow", "grows", "grew", "growing"},
    {"lose", "loses", "lost", "losing"},     {"fall", "falls", "fell", "falling"},
    {"send", "sends", "sent", "sending"},    {"build", "builds", "built", "building"},
    {"draw", "draws", "drew", "drawing"},    {"break", "breaks", "broke", "breaking"},
    {"spend", "spends", "spent", "spending"}, {"cut", "cuts", "cut", "cutting"},
    {"rise", "rises", "rose", "rising"},     {"drive", "drives", "drove", "driving"},
    {"buy", "buys", "bought", "buying"},     {"wear", "wears", "wore", "wearing"},
    {"choose", "chooses", "chose", "choosing"}, {"catch", "catches", "caught", "catching"},
    {"throw", "throws", "threw", "throwing"}, {"shake", "shakes", "shook", "shaking"},
    {"sell", "sells", "sold", "selling"},    {"eat", "eats", "ate", "eating"},
    {"drink", "drinks", "drank", "drinking"}, {"sing", "sings", "sang", "singing"},
    {"ride", "rides", "rode", "riding"},     {"fly", "flies", "flew", "flying"},
    {"swim", "swims", "swam", "swimming"},   {"win", "wins", "won", "winning"},
    {"forget", "forgets", "forgot", "forgetting"}, {"sleep", "sleeps", "slept", "sleeping"},
    {"blow", "blows", "blew", "blowing"},    {"teach", "teaches", "taught", "teaching"},
    {"fight", "fights", "fought", "fighting"}, {"seek", "seeks", "sought", "seeking"},
    {"sweep", "sweeps", "swept", "sweeping"}, {"dig", "digs", "dug", "digging"},
    {"hang", "hangs", "hung", "hanging"},    {"strike", "strikes", "struck", "striking"},
    {"feed", "feeds", "fed", "feeding"},     {"hide", "hides", "hid", "hiding"},
    {"shine", "shines", "shone", "shining"}, {"bend", "bends", "bent", "bending"},
    {"ask", "asks", "asked", "asking"},      {"look", "looks", "looked", "looking"},
    {"want", "wants", "wanted", "wanting"},  {"call", "calls", "called", "calling"},
    {"try", "tries", "tried", "trying"},     {"need", "needs", "needed", "needing"},
    {"play", "plays", "played", "playing"},  {"stay", "stays", "stayed", "staying"},
    {"believe", "believes", "believed", "believing"},
    {"happen", "happens", "happened", "happening"},
    {"watch", "watches", "watched", "watching"}, {"reach", "reaches", "reached", "reaching"},
    {"touch", "touches", "touched", "touching"}, {"push", "pushes", "pushed", "pushing"},
    {"pass", "passes", "passed", "passing"}, {"miss", "misses", "missed", "missing"},
    {"wish", "wishes", "wished", "wishing"}, {"finish", "finishes", "finished", "finishing"},
    {"help", "helps", "helped", "helping"},  {"offer", "offers", "offered", "offering"},
    {"cover", "covers", "covered", "covering"}, {"enter", "enters", "entered", "entering"},
    {"visit", "visits", "visited", "visiting"}, {"wonder", "wonders", "wondered", "wondering"},
    {"listen", "listens", "listened", "listening"},
    {"travel", "travels", "traveled", "traveling"},
    {"return", "returns", "returned", "returning"},
    {"remember", "remembers", "remembered", "remembering"},
    {"explain", "explains", "explained", "explaining"},
    {"consider", "considers", "considered", "considering"},
    {"continue", "continues", "continued", "continuing"},
    {"suppose", "supposes", "supposed", "supposing"},
    {"imagine", "imagines", "imagined", "imagining"},
    {"decide", "decides", "decided", "deciding"},
    {"promise", "promises", "promised", "promising"},
    {"prepare", "prepares", "prepared", "preparing"},
    {"notice", "notices", "noticed", "noticing"},
    {"realize", "realizes", "realized", "realizing"},
    {"suffer", "suffers", "suffered", "suffering"},
    {"deliver", "delivers", "delivered", "delivering"},
    {"develop", "develops", "developed", "developing"},
    {"discover", "discovers", "discovered", "discovering"},
    {"welcome", "welcomes", "welcomed", "welcoming"},
    {"answer", "answers", "answered", "answering"},
    {"dream", "dreams", "dreamed", "dreaming"},
    {"work", "works", "worked", "working"},
    {"end", "ends", "ended", "ending"},
    {"place", "places", "placed", "placing"},
    {"name", "names", "named", "naming"},
    {"carry", "carries", "carried", "carrying"},
    {"study", "studies", "studied", "studying"},
    {"marry", "marries", "married", "marrying"},
    {"hurry", "hurries", "hurried", "hurrying"},
    {"worry", "worries", "worried", "worrying"},
};

// Regular full-paradigm family (signature NULL.ed.ing.s).
const Verb kVerbsFull[] = {
    {"jump", "jumps", "jumped", "jumping"},   {"walk", "walks", "walked", "walking"},
    {"talk", "talks", "talked", "talking"},   {"paint", "paints", "painted", "painting"},
    {"cook", "cooks", "cooked", "cooking"},   {"climb", "climbs", "climbed", "climbing"},
    {"shout", "shouts", "shouted", "shouting"}, {"wait", "waits", "waited", "waiting"},
    {"clean", "cleans", "cleaned", "cleaning"}, {"count", "counts", "counted", "counting"},
    {"plant", "plants", "planted", "planting"}, {"start", "starts", "started", "starting"},
    {"turn", "turns", "turned", "turning"},   {"burn", "burns", "burned", "burning"},
    {"learn", "learns", "learned", "learning"}, {"pick", "picks", "picked", "picking"},
    {"kick", "kicks", "kicked", "kicking"},   {"lock", "locks", "locked", "locking"},
    {"fold", "folds", "folded", "folding"},   {"lift", "lifts", "lifted", "lifting"},
    {"hunt", "hunts", "hunted", "hunting"},   {"follow", "follows", "followed", "following"},
    {"print", "prints", "printed", "printing"}, {"point", "points", "pointed", "pointing"},
    {"rent", "rents", "rented", "renting"},   {"sail", "sails", "sailed", "sailing"},
    {"boil", "boils", "boiled", "boiling"},   {"melt", "melts", "melted", "melting"},
    {"mend", "mends", "mended", "mending"},   {"hand", "hands", "handed", "handing"},
};

// Plural-subject-only verbs (signature NULL.ed.ing).
const Verb kVerbsNoThird[] = {
    {"gather", nullptr, "gathered", "gathering"},
    {"wander", nullptr, "wandered", "wandering"},
    {"whisper", nullptr, "whispered", "whispering"},
    {"mutter", nullptr, "muttered", "muttering"},
    {"murmur", nullptr, "murmured", "murmuring"},
    {"march", nullptr, "marched", "marching"},
    {"drift", nullptr, "drifted", "drifting"},
    {"crawl", nullptr, "crawled", "crawling"},
    {"linger", nullptr, "lingered", "lingering"},
    {"scatter", nullptr, "scattered", "scattering"},
    {"frown", nullptr, "frowned", "frowning"},
    {"growl", nullptr, "growled", "growling"},
};

// Stative verbs, no progressive (signature NULL.ed.s).
const Verb kVerbsNoIng[] = {
    {"seem", "seems", "seemed", nullptr},     {"appear", "appears", "appeared", nullptr},
    {"belong", "belongs", "belonged", nullptr}, {"remain", "remains", "remained", nullptr},
    {"depend", "depends", "depended", nullptr}, {"expect", "expects", "expected", nullptr},
    {"contain", "contains", "contained", nullptr},
    {"concern", "concerns", "concerned", nullptr},
};

// e-final full paradigm (signature e.ed.es.ing on the truncated stem).
const Verb kVerbsEFull[] = {
    {"move", "moves", "moved", "moving"},     {"live", "lives", "lived", "living"},
    {"use", "uses", "used", "using"},         {"love", "loves", "loved", "loving"},
    {"hope", "hopes", "hoped", "hoping"},     {"close", "closes", "closed", "closing"},
    {"raise", "raises", "raised", "raising"}, {"dance", "dances", "danced", "dancing"},
    {"smile", "smiles", "smiled", "smiling"}, {"share", "shares", "shared", "sharing"},
    {"save", "saves", "saved", "saving"},     {"serve", "serves", "served", "serving"},
    {"change", "changes", "changed", "changing"},
    {"chase", "chases", "chased", "chasing"},
};

// e-final, plural-subject-only (signature e.ed.ing).
const Verb kVerbsENoThird[] = {
    {"gaze", nullptr, "gazed", "gazing"},       {"glance", nullptr, "glanced", "glancing"},
    {"trudge", nullptr, "trudged", "trudging"}, {"grumble", nullptr, "grumbled", "grumbling"},
    {"mumble", nullptr, "mumbled", "mumbling"}, {"scramble", nullptr, "scrambled", "scrambling"},
    {"wrestle", nullptr, "wrestled", "wrestling"},
    {"shuffle", nullptr, "shuffled", "shuffling"},
    {"tremble", nullptr, "trembled", "trembling"},
    {"struggle", nullptr, "struggled", "struggling"},
};

// Past/progressive only, never bare (signature ed.ing).
const Verb kVerbsPastOnly[] = {
    {nullptr, nullptr, "proclaimed", "proclaiming"},
    {nullptr, nullptr, "responded", "responding"},
    {nullptr, nullptr, "insisted", "insisting"},
    {nullptr, nullptr, "persisted", "persisting"},
};

// Full paradigm plus a -ment noun (signature NULL.ed.ing.ment.ments.s).
const Verb kVerbsMent[] = {
    {"govern", "governs", "governed", "governing"},
    {"appoint", "appoints", "appointed", "appointing"},
};

struct Noun {
    const char* sg;
    const char* pl;   // null = no plural use
    const char* poss; // null = no possessive use
};

const Noun kCoreNouns[] = {
    {"time", "times", nullptr},    {"man", "men", "man's"},       {"woman", "women", "woman's"},
    {"child", "children", "child's"}, {"year", "years", nullptr}, {"day", "days", nullptr},
    {"way", "ways", nullptr},      {"thing", "things", nullptr},  {"world", "worlds", nullptr},
    {"hand", "hands", nullptr},    {"part", "parts", nullptr},    {"eye", "eyes", nullptr},
    {"place", "places", nullptr},  {"work", "works", nullptr},    {"head", "heads", nullptr},
    {"face", "faces", nullptr},    {"friend", "friends", "friend's"}, {"night", "nights", nullptr},
    {"room", "rooms", nullptr},    {"morning", "mornings", nullptr}, {"evening", "evenings", nullptr},
    {"side", "sides", nullptr},    {"end", "ends", nullptr},      {"kind", "kinds", nullptr},
    {"state", "states", nullptr},  {"house", "houses", nullptr},  {"war", "wars", nullptr},
    {"horse", "horses", "horse's"}, {"dog", "dogs", "dog's"},     {"cat", "cats", "cat's"},
    {"bird", "birds", nullptr},    {"tree", "trees", nullptr},    {"stone", "stones", nullptr},
    {"word", "words", nullptr},    {"name", "names", nullptr},    {"letter", "letters", nullptr},
    {"book", "books", nullptr},    {"story", "stories", nullptr}, {"song", "songs", nullptr},
    {"voice", "voices", nullptr},  {"sound", "sounds", nullptr},  {"light", "lights", nullptr},
    {"fire", "fires", nullptr},    {"sun", "suns", nullptr},      {"moon", "moons", nullptr},
    {"star", "stars", nullptr},    {"sky", "skies", nullptr},     {"sea", "seas", nullptr},
    {"land", "lands", nullptr},    {"ground", "grounds", nullptr}, {"table", "tables", nullptr},
    {"chair", "chairs", nullptr},  {"bed", "beds", nullptr},      {"cup", "cups", nullptr},
    {"knife", "knives", nullptr},  {"coat", "coats", nullptr},    {"shoe", "shoes", nullptr},
    {"hat", "hats", nullptr},      {"ring", "rings", nullptr},    {"sword", "swords", nullptr},
    {"crown", "crowns", nullptr},  {"ship", "ships", nullptr},    {"wheel", "wheels", nullptr},
    {"rope", "ropes", nullptr},    {"stick", "sticks", nullptr},  {"leaf", "leaves", nullptr},
    {"flower", "flowers", nullptr}, {"seed", "seeds", nullptr},   {"apple", "apples", nullptr},
    {"egg", "eggs", nullptr},      {"cake", "cakes", nullptr},    {"meal", "meals", nullptr},
    {"game", "games", nullptr},    {"dream", "dreams", nullptr},  {"thought", "thoughts", nullptr},
    {"plan", "plans", nullptr},    {"reason", "reasons", nullptr}, {"answer", "answers", nullptr},
    {"question", "questions", nullptr}, {"problem", "problems", nullptr},
    {"lesson", "lessons", nullptr}, {"journey", "journeys", nullptr},
    {"guest", "guests", "guest's"}, {"stranger", "strangers", "stranger's"},
    {"neighbor", "neighbors", "neighbor's"}, {"winter", "winters", nullptr},
    {"summer", "summers", nullptr}, {"spring", "springs", nullptr},
    {"autumn", "autumns", nullptr}, {"week", "weeks", nullptr},
    {"month", "months", nullptr},  {"hour", "hours", nullptr},    {"minute", "minutes", nullptr},
    {"corner", "corners", nullptr}, {"middle", nullptr, nullptr}, {"edge", "edges", nullptr},
    {"top", "tops", nullptr},      {"bottom", "bottoms", nullptr},
    {"north", nullptr, nullptr},   {"south", nullptr, nullptr},   {"east", nullptr, nullptr},
    {"west", nullptr, nullptr},    {"boy", "boys", "boy's"},      {"girl", "girls", "girl's"},
    {"visit", "visits", nullptr},  {"look", "looks", nullptr},    {"call", "calls", nullptr},
    {"play", "plays", nullptr},    {"return", "returns", nullptr}, {"watch", nullptr, nullptr},
    {"right", "rights", nullptr},  {"cold", nullptr, nullptr},
    {"arm", "arms", nullptr},      {"foot", "feet", nullptr},     {"leg", "legs", nullptr},
    {"ear", "ears", nullptr},      {"mouth", "mouths", nullptr},  {"finger", "fingers", nullptr},
    {"shoulder", "shoulders", nullptr}, {"heart", "hearts", nullptr},
    {"mind", "minds", nullptr},    {"soul", "souls", nullptr},    {"body", "bodies", nullptr},
    {"city", "cities", nullptr},   {"country", "countries", nullptr},
    {"family", "families", nullptr}, {"army", "armies", nullptr}, {"enemy", "enemies", nullptr},
    {"lady", "ladies", nullptr},   {"baby", "babies", nullptr},   {"pony", "ponies", nullptr},
    {"penny", "pennies", nullptr}, {"fish", "fish", nullptr},
    {"sheep", "sheep", nullptr},   {"deer", "deer", nullptr},     {"ox", "oxen", nullptr},
    {"goose", "geese", nullptr},   {"mouse", "mice", nullptr},    {"wolf", "wolves", nullptr},
    {"calf", "calves", nullptr},   {"shelf", "shelves", nullptr}, {"loaf", "loaves", nullptr},
    {"half", "halves", nullptr},   {"wife", "wives", nullptr},    {"bell", "bells", nullptr},
    {"drum", "drums", nullptr},    {"flag", "flags", nullptr},    {"coin", "coins", nullptr},
    {"jewel", "jewels", nullptr},  {"chain", "chains", nullptr},  {"glove", "gloves", nullptr},
    {"boot", "boots", nullptr},    {"cloak", "cloaks", nullptr},  {"pocket", "pockets", nullptr},
    {"button", "buttons", nullptr}, {"candle", "candles", nullptr},
    {"mirror", "mirrors", nullptr}, {"carpet", "carpets", nullptr},
    {"curtain", "curtains", nullptr}, {"blanket", "blankets", nullptr},
    {"pillow", "pillows", nullptr}, {"kettle", "kettles", nullptr},
    {"spoon", "spoons", nullptr},  {"fork", "forks", nullptr},    {"plate", "plates", nullptr},
    {"bowl", "bowls", nullptr},    {"pot", "pots", nullptr},      {"pan", "pans", nullptr},
    {"oven", "ovens", nullptr},    {"pie", "pies", nullptr},      {"soup", "soups", nullptr},
    {"cheese", "cheeses", nullptr}, {"berry", "berries", nullptr},
    {"cherry", "cherries", nullptr}, {"plum", "plums", nullptr},  {"pear", "pears", nullptr},
    {"grape", "grapes", nullptr},  {"nut", "nuts", nullptr},      {"root", "roots", nullptr},
    {"stem", "stems", nullptr},    {"petal", "petals", nullptr},  {"thorn", "thorns", nullptr},
    {"vine", "vines", nullptr},    {"moss", nullptr, nullptr},    {"fern", "ferns", nullptr},
    {"owl", "owls", nullptr},      {"crow", "crows", nullptr},    {"swan", "swans", nullptr},
    {"duck", "ducks", nullptr},    {"hen", "hens", nullptr},      {"lamb", "lambs", nullptr},
    {"goat", "goats", nullptr},    {"pig", "pigs", nullptr},      {"cow", "cows", nullptr},
    {"bull", "bulls", nullptr},    {"bee", "bees", nullptr},      {"ant", "ants", nullptr},
    {"spider", "spiders", nullptr}, {"worm", "worms", nullptr},   {"snake", "snakes", nullptr},
    {"frog", "frogs", nullptr},    {"rabbit", "rabbits", nullptr},
    {"squirrel", "squirrels", nullptr}, {"badger", "badgers", nullptr},
    {"otter", "otters", nullptr},  {"beaver", "beavers", nullptr},
};

const char* kMassNouns[] = {"water", "air",  "snow", "rain",  "bread", "gold",
                            "grass", "wood", "wine", "milk",  "salt",  "iron",
                            "silk",  "honey", "dust", "smoke", "mud",   "fog",
                            "sand",  "clay", "fur",  "wool",  "steam", "ice",
                            "oil",   "tea",  "coffee", "sugar"};

// Simple -s plurals (signature NULL.s).
const Noun kNounsPlain[] = {
    {"road", "roads", nullptr},       {"hill", "hills", nullptr},
    {"river", "rivers", nullptr},     {"mountain", "mountains", nullptr},
    {"forest", "forests", nullptr},   {"garden", "gardens", nullptr},
    {"window", "windows", nullptr},   {"door", "doors", nullptr},
    {"wall", "walls", nullptr},       {"roof", "roofs", nullptr},
    {"floor", "floors", nullptr},     {"street", "streets", nullptr},
    {"market", "markets", nullptr},   {"village", "villages", nullptr},
    {"town", "towns", nullptr},       {"farm", "farms", nullptr},
    {"path", "paths", nullptr},       {"bridge", "bridges", nullptr},
    {"tower", "towers", nullptr},     {"castle", "castles", nullptr},
    {"boat", "boats", nullptr},       {"wagon", "wagons", nullptr},
    {"barn", "barns", nullptr},       {"meadow", "meadows", nullptr},
    {"valley", "valleys", nullptr},   {"stream", "streams", nullptr},
    {"cloud", "clouds", nullptr},     {"storm", "storms", nullptr},
    {"field", "fields", nullptr},     {"lamp", "lamps", nullptr},
    {"basket", "baskets", nullptr},   {"bottle", "bottles", nullptr},
    {"barrel", "barrels", nullptr},   {"ladder", "ladders", nullptr},
    {"hammer", "hammers", nullptr},   {"nail", "nails", nullptr},
    {"fence", "fences", nullptr},     {"gate", "gates", nullptr},
    {"pond", "ponds", nullptr},       {"island", "islands", nullptr},
    {"lake", "lakes", nullptr},       {"shore", "shores", nullptr},
    {"cliff", "cliffs", nullptr},     {"cave", "caves", nullptr},
    {"harbor", "harbors", nullptr},   {"tunnel", "tunnels", nullptr},
    {"cellar", "cellars", nullptr},   {"attic", "attics", nullptr},
    {"stable", "stables", nullptr},   {"mill", "mills", nullptr},
    {"cottage", "cottages", nullptr}, {"hut", "huts", nullptr},
    {"tent", "tents", nullptr},       {"camp", "camps", nullptr},
    {"fort", "forts", nullptr},       {"dock", "docks", nullptr},
    {"orchard", "orchards", nullptr}, {"courtyard", "courtyards", nullptr},
};

// -es plurals (signature NULL.es).
const Noun kNounsEs[] = {
    {"branch", "branches", nullptr}, {"bench", "benches", nullptr},
    {"bush", "bushes", nullptr},     {"box", "boxes", nullptr},
    {"dish", "dishes", nullptr},     {"fox", "foxes", nullptr},
};

// Person nouns with plural and possessive (signature NULL.'s.s).
const Noun kNounsPersonFull[] = {
    {"king", "kings", "king's"},       {"queen", "queens", "queen's"},
    {"bishop", "bishops", "bishop's"}, {"knight", "knights", "knight's"},
    {"priest", "priests", "priest's"}, {"widow", "widows", "widow's"},
    {"servant", "servants", "servant's"}, {"tailor", "tailors", "tailor's"},
    {"captain", "captains", "captain's"}, {"doctor", "doctors", "doctor's"},
    {"soldier", "soldiers", "soldier's"}, {"merchant", "merchants", "merchant's"},
    {"duke", "dukes", "duke's"},       {"earl", "earls", "earl's"},
};

// Possessive but no plural use (signature NULL.'s).
const Noun kNounsPersonPoss[] = {
    {"father", nullptr, "father's"},   {"mother", nullptr, "mother's"},
    {"brother", nullptr, "brother's"}, {"sister", nullptr, "sister's"},
    {"husband", nullptr, "husband's"}, {"landlord", nullptr, "landlord's"},
    {"grandfather", nullptr, "grandfather's"}, {"grandmother", nullptr, "grandmother's"},
};

// Bare verb + -ment noun (signature NULL.ment); the verbs are used bare only.
struct MentPair {
    const char* verb;
    const char* noun;
};
const MentPair kMentPairs[] = {
    {"equip", "equipment"},   {"treat", "treatment"},  {"punish", "punishment"},
    {"settle", "settlement"}, {"amuse", "amusement"},  {"pave", "pavement"},
    {"adorn", "adornment"},   {"astonish", "astonishment"},
};

// Noun (sg, pl) + -al adjective (signature NULL.al.s).
struct AlTriple {
    const char* noun;
    const char* plural;
    const char* adj;
};
const AlTriple kAlTriples[] = {
    {"nation", "nations", "national"},
    {"section", "sections", "sectional"},
    {"coast", "coasts", "coastal"},
    {"margin", "margins", "marginal"},
    {"ornament", "ornaments", "ornamental"},
};
// Noun + -al adjective, no plural (signature NULL.al).
struct AlPair {
    const char* noun;
    const char* adj;
};
const AlPair kAlPairs[] = {
    {"region", "regional"},
    {"season", "seasonal"},
    {"music", "musical"},
    {"tropic", "tropical"},
};

// Adjective + -ly adverb (signature NULL.ly).
struct LyPair {
    const char* adj;
    const char* adv;
};
const LyPair kLyPairs[] = {
    {"quick", "quickly"},   {"calm", "calmly"},   {"bright", "brightly"},
    {"quiet", "quietly"},   {"soft", "softly"},   {"loud", "loudly"},
    {"swift", "swiftly"},   {"sharp", "sharply"}, {"smooth", "smoothly"},
    {"plain", "plainly"},   {"slow", "slowly"},   {"glad", "gladly"},
    {"neat", "neatly"},     {"faint", "faintly"}, {"fond", "fondly"},
    {"grim", "grimly"},     {"keen", "keenly"},   {"stiff", "stiffly"},
    {"blunt", "bluntly"},   {"shrewd", "shrewdly"},
};
// Adjective + -ly adverb + -ness noun (signature NULL.ly.ness).
struct LyNessTriple {
    const char* adj;
    const char* adv;
    const char* noun;
};
const LyNessTriple kLyNessTriples[] = {
    {"dark", "darkly", "darkness"},
    {"bold", "boldly", "boldness"},
    {"firm", "firmly", "firmness"},
    {"stern", "sternly", "sternness"},
    {"harsh", "harshly", "harshness"},
    {"meek", "meekly", "meekness"},
};

const char* kCoreAdjs[] = {
    "good",  "new",    "old",    "great",  "little", "large", "small",  "long",
    "young", "big",    "high",   "low",    "right",  "wrong", "full",   "empty",
    "whole", "poor",   "rich",   "happy",  "strange", "deep", "heavy",  "busy",
    "warm",  "cool",   "fine",   "fair",   "wild",   "broad", "tall",   "thin",
    "thick", "flat",   "round",  "green",  "blue",   "red",   "white",  "black",
    "brown", "golden", "silver", "wooden", "ancient", "narrow", "gentle", "pale",
    "grand", "distant", "light", "certain", "common", "modern", "foreign", "famous", "serious",
    "curious", "silent", "solid", "steady", "hollow", "crooked", "humble", "clever",
    "polite", "honest", "proud",  "tired",  "eager",  "weary",
};

const char* kDetSg[] = {"the", "a",   "his",  "her",   "this", "that", "its",
                        "their", "our", "my",  "your",  "each", "every", "another"};
const char* kDetPl[] = {"the",  "their", "these", "those", "some", "many", "his",
                        "her",  "our",   "all",   "few",  "several", "both", "most"};
const char* kNumbers[] = {"two",  "three", "four", "five", "six",    "seven",
                          "eight", "nine",  "ten",  "twelve", "twenty", "hundred",
                          "eleven", "thirteen", "fifteen", "thirty", "forty", "fifty"};
const char* kPronSg[] = {"he", "she", "it"};
const char* kPronPl[] = {"they", "we", "you", "i"};
const char* kPronObj[] = {"him", "her", "them", "it", "us", "me"};
const char* kPreps[] = {"of",    "in",     "to",      "with",    "on",      "at",
                        "by",    "from",   "for",     "over",    "under",   "about",
                        "into",  "through", "after",  "before",  "between", "against",
                        "during", "without", "within", "along",  "across",  "near",
                        "behind", "beyond", "among",  "around",  "toward",  "inside"};
const char* kConj[] = {"and", "but", "or", "because", "while", "when", "although", "if"};
const char* kInterject[] = {"yes", "no", "well", "oh", "indeed", "surely"};
const char* kModals[] = {"will", "would", "can", "could", "may", "might", "must", "should"};
const char* kNegAux[] = {"did not", "does not", "do not", "don't", "didn't",
                         "doesn't", "won't",    "can't",  "couldn't"};
const char* kAdvDeg[] = {"very", "quite", "rather", "too", "so", "almost", "really"};
const char* kAdvPlain[] = {"then",  "there", "here",    "now",     "often",   "always",
                           "never", "still", "soon",    "again",   "already", "usually",
                           "sometimes", "perhaps", "finally", "together", "away",  "back"};

/// Zipf-ish sampler over a list: weight(i) = 1 / (i + offset)^exponent.
class Picker {
public:
    Picker() = default;
    Picker(std::size_t count, double exponent, double offset = 2.0) {
        std::vector<double> weights(count);
        for (std::size_t i = 0; i < count; ++i) {
            weights[i] = 1.0 / std::pow(static_cast<double>(i) + offset, exponent);
        }
        dist_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
    }
    std::size_t operator()(std::mt19937_64& rng) { return dist_(rng); }

private:
    std::discrete_distribution<std::size_t> dist_;
};

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {
        verbs_.insert(verbs_.end(), std::begin(kCoreVerbs), std::end(kCoreVerbs));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsFull), std::end(kVerbsFull));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsNoThird),
                             std::end(kVerbsNoThird));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsNoIng), std::end(kVerbsNoIng));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsEFull), std::end(kVerbsEFull));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsENoThird),
                             std::end(kVerbsENoThird));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsPastOnly),
                             std::end(kVerbsPastOnly));
        family_verbs_.insert(family_verbs_.end(), std::begin(kVerbsMent), std::end(kVerbsMent));
        for (const MentPair& p : kMentPairs) {
            family_verbs_.push_back(Verb{p.verb, nullptr, nullptr, nullptr}); // bare use only
        }

        nouns_.insert(nouns_.end(), std::begin(kCoreNouns), std::end(kCoreNouns));
        for (const char* mass : kMassNouns) nouns_.push_back(Noun{mass, nullptr, nullptr});
        family_nouns_.insert(family_nouns_.end(), std::begin(kNounsPlain), std::end(kNounsPlain));
        family_nouns_.insert(family_nouns_.end(), std::begin(kNounsEs), std::end(kNounsEs));
        family_nouns_.insert(family_nouns_.end(), std::begin(kNounsPersonFull),
                             std::end(kNounsPersonFull));
        family_nouns_.insert(family_nouns_.end(), std::begin(kNounsPersonPoss),
                             std::end(kNounsPersonPoss));
        for (const MentPair& p : kMentPairs) family_nouns_.push_back(Noun{p.noun, nullptr, nullptr});
        for (const AlTriple& t : kAlTriples) family_nouns_.push_back(Noun{t.noun, t.plural, nullptr});
        for (const AlPair& p : kAlPairs) family_nouns_.push_back(Noun{p.noun, nullptr, nullptr});
        for (const LyNessTriple& t : kLyNessTriples) {
            family_nouns_.push_back(Noun{t.noun, nullptr, nullptr});
        }
        family_nouns_.push_back(Noun{"government", "governments", nullptr});
        family_nouns_.push_back(Noun{"appointment", "appointments", nullptr});

        adjs_.insert(adjs_.end(), std::begin(kCoreAdjs), std::end(kCoreAdjs));
        for (const AlTriple& t : kAlTriples) al_adjs_.push_back(t.adj);
        for (const AlPair& p : kAlPairs) al_adjs_.push_back(p.adj);
        for (const LyPair& p : kLyPairs) family_adjs_.push_back(p.adj);
        for (const LyNessTriple& t : kLyNessTriples) family_adjs_.push_back(t.adj);

        for (const LyPair& p : kLyPairs) family_advs_.push_back(p.adv);
        for (const LyNessTriple& t : kLyNessTriples) family_advs_.push_back(t.adv);

        pick_core_verb_ = Picker(verbs_.size(), 0.85);
        pick_family_verb_ = Picker(family_verbs_.size(), 0.35);
        pick_core_noun_ = Picker(nouns_.size(), 0.85);
        pick_family_noun_ = Picker(family_nouns_.size(), 0.35);
        pick_core_adj_ = Picker(adjs_.size(), 0.8);
        pick_family_adj_ = Picker(family_adjs_.size(), 0.3);
        pick_family_adv_ = Picker(family_advs_.size(), 0.3);
    }

    GeneratedCorpus run(std::uint64_t target_tokens) {
        GeneratedCorpus out;
        out.text.reserve(target_tokens * 6);
        while (tokens_ < target_tokens) sentence(out.text);
        out.lexicon = lexicon();
        return out;
    }

private:
    bool chance(double p) { return uniform_(rng_) < p; }
    template <std::size_t N>
    const char* uniform_pick(const char* (&list)[N]) {
        return list[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng_)];
    }
    /// Function words follow a steep frequency curve ("the" dominates).
    template <std::size_t N>
    const char* zipf_pick(const char* (&list)[N]) {
        auto [it, inserted] = zipf_.try_emplace(static_cast<const void*>(&list), Picker());
        if (inserted) it->second = Picker(N, 1.15, 1.0);
        return list[it->second(rng_)];
    }

    const Verb& verb() {
        // Family verbs take a fixed share of verb slots so their forms stay
        // below the atomic cut but above the pseudo-word frequency floor.
        if (chance(0.13)) return family_verbs_[pick_family_verb_(rng_)];
        return verbs_[pick_core_verb_(rng_)];
    }
    const Noun& noun() {
        if (chance(0.15)) return family_nouns_[pick_family_noun_(rng_)];
        return nouns_[pick_core_noun_(rng_)];
    }
    const char* adjective() {
        double r = uniform_(rng_);
        // derived -al adjectives are kept rare so they stay below the atomic cut
        if (r < 0.008) {
            return al_adjs_[std::uniform_int_distribution<std::size_t>(0, al_adjs_.size() - 1)(
                rng_)];
        }
        if (r < 0.09) return family_adjs_[pick_family_adj_(rng_)];
        return adjs_[pick_core_adj_(rng_)];
    }
    const char* adverb() {
        if (chance(0.12)) return family_advs_[pick_family_adv_(rng_)];
        return zipf_pick(kAdvPlain);
    }

    const Verb& verb_with(const char* Verb::* form) {
        while (true) {
            const Verb& v = verb();
            if (v.*form != nullptr) return v;
        }
    }
    const Noun& noun_with(const char* Noun::* form) {
        while (true) {
            const Noun& n = noun();
            if (n.*form != nullptr) return n;
        }
    }

    void emit(const char* word) {
        if (!pending_.empty()) pending_ += ' ';
        pending_ += word;
        // "did not" counts as two tokens
        for (const char* c = word; *c; ++c) {
            if (*c == ' ') ++tokens_;
        }
        ++tokens_;
    }

    // --- noun phrases ---------------------------------------------------

    void adjp() {
        double r = uniform_(rng_);
        if (r < 0.03) { // participial modifier: "a painted wall"
            emit(verb_with(&Verb::past).past);
            return;
        }
        if (r < 0.09) { // "the walking man"
            emit(verb_with(&Verb::ing).ing);
            return;
        }
        if (chance(0.18)) emit(zipf_pick(kAdvDeg));
        emit(adjective());
        if (chance(0.08)) { // coordinated adjectives: "old and gray"
            emit("and");
            emit(adjective());
        }
    }

    void np_sg(int depth = 0) {
        double r = uniform_(rng_);
        if (r < 0.18) {
            emit(uniform_pick(kPronSg));
            return;
        }
        emit(zipf_pick(kDetSg));
        if (r < 0.25) { // possessive: "the king's horse"
            emit(noun_with(&Noun::poss).poss);
        } else if (r < 0.52) {
            adjp();
        }
        if (chance(0.05)) emit(noun_with(&Noun::sg).sg); // compound: "the village church"
        emit(noun_with(&Noun::sg).sg);
        tail(depth, false);
    }

    void np_pl(int depth = 0) {
        double r = uniform_(rng_);
        if (r < 0.2) {
            emit(uniform_pick(kPronPl));
            return;
        }
        if (r < 0.35) {
            emit(uniform_pick(kNumbers));
        } else {
            if (chance(0.04)) emit(chance(0.5) ? "all" : "both"); // predeterminer
            emit(zipf_pick(kDetPl));
        }
        if (chance(0.22)) adjp();
        emit(noun_with(&Noun::pl).pl);
        tail(depth, true);
    }

    /// Optional noun-phrase tail: genitive "of" chain or a relative clause.
    void tail(int depth, bool plural) {
        if (depth >= 2) return;
        double r = uniform_(rng_);
        if (r < 0.10) { // "the edge of the forest"
            emit("of");
            np_any(chance(0.3), depth + 1);
        } else if (r < 0.16) { // "the man who walked by"
            emit(chance(0.5) ? "who" : "that");
            if (!plural && chance(0.4)) {
                emit(verb_with(&Verb::third).third);
            } else {
                emit(verb_with(&Verb::past).past);
            }
            if (chance(0.5)) pp();
        }
    }

    void np_any(bool plural, int depth = 0) { plural ? np_pl(depth) : np_sg(depth); }

    void object() {
        double r = uniform_(rng_);
        if (r < 0.15) {
            emit(uniform_pick(kPronObj));
        } else {
            np_any(chance(0.4));
        }
    }

    void pp() {
        emit(zipf_pick(kPreps));
        if (chance(0.06)) { // "after walking ..."
            emit(verb_with(&Verb::ing).ing);
            if (chance(0.4)) np_any(chance(0.35), 2);
            return;
        }
        np_any(chance(0.35));
    }

    void post_verb(bool allow_object) {
        double r = uniform_(rng_);
        if (r < 0.07) { // infinitive complement: "came to see the king"
            emit("to");
            emit(verb_with(&Verb::base).base);
            if (chance(0.5)) object();
            return;
        }
        if (allow_object && r < 0.45) {
            object();
            if (chance(0.25)) pp();
        } else if (r < 0.75) {
            pp();
        } else if (r < 0.9) {
            emit(adverb());
        }
        // else: bare intransitive
    }

    // --- sentences ------------------------------------------------------

    void subject(bool& plural) {
        plural = chance(0.4);
        if (chance(0.07)) { // "the king and the queen ..."
            np_any(chance(0.3), 2);
            emit("and");
            np_any(chance(0.3), 2);
            plural = true;
            return;
        }
        np_any(plural);
    }

    void clause() {
        double r = uniform_(rng_);
        if (r < 0.27) { // simple past
            bool plural;
            subject(plural);
            if (chance(0.10)) emit(adverb());
            const Verb& v = verb_with(&Verb::past);
            emit(v.past);
            if (chance(0.06)) { // "walked and talked"
                emit(chance(0.7) ? "and" : "or");
                emit(verb_with(&Verb::past).past);
            }
            post_verb(true);
        } else if (r < 0.42) { // 3rd singular present
            np_sg();
            const Verb& v = verb_with(&Verb::third);
            emit(v.third);
            post_verb(true);
        } else if (r < 0.54) { // plural present
            np_pl();
            emit(verb_with(&Verb::base).base);
            post_verb(true);
        } else if (r < 0.64) { // progressive
            bool plural = chance(0.4);
            bool past = chance(0.5);
            np_any(plural);
            emit(past ? (plural ? "were" : "was") : (plural ? "are" : "is"));
            emit(verb_with(&Verb::ing).ing);
            post_verb(true);
        } else if (r < 0.74) { // copula + adjective or predicate NP
            bool plural = chance(0.4);
            np_any(plural);
            emit(chance(0.5) ? (plural ? "were" : "was") : (plural ? "are" : "is"));
            if (chance(0.22)) { // "he was a soldier"
                np_any(plural, 1);
            } else {
                if (chance(0.25)) emit(zipf_pick(kAdvDeg));
                emit(adjective());
                if (chance(0.2)) pp();
            }
        } else if (r < 0.82) { // modal + bare verb
            np_any(chance(0.4));
            emit(zipf_pick(kModals));
            emit(verb_with(&Verb::base).base);
            post_verb(true);
        } else if (r < 0.88) { // fronted PP
            pp();
            np_any(chance(0.4));
            emit(verb_with(&Verb::past).past);
            post_verb(false);
        } else if (r < 0.94) { // negation + bare verb
            np_any(chance(0.4));
            emit(zipf_pick(kNegAux));
            emit(verb_with(&Verb::base).base);
            post_verb(true);
        } else { // existential
            bool plural = chance(0.5);
            emit("there");
            emit(plural ? (chance(0.5) ? "were" : "are") : (chance(0.5) ? "was" : "is"));
            np_any(plural);
            if (chance(0.4)) pp();
        }
    }

    void sentence(std::string& text) {
        pending_.clear();
        double kind = uniform_(rng_);
        if (kind < 0.03) { // fragment noise: lists, headlines, interjections
            fragment();
        } else {
            if (chance(0.08)) emit(adverb()); // "then the king ..."
            else if (chance(0.02)) emit(uniform_pick(kInterject));
            clause();
        }
        if (kind >= 0.03 && chance(0.14)) {
            emit(zipf_pick(kConj));
            clause();
        }
        if (chance(0.9) && !pending_.empty()) {
            pending_[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(pending_[0])));
        }
        double p = uniform_(rng_);
        pending_ += p < 0.88 ? "." : (p < 0.95 ? "!" : "?");
        text += pending_;
        text += '\n';
    }

    void fragment() {
        int len = std::uniform_int_distribution<int>(3, 8)(rng_);
        for (int i = 0; i < len; ++i) {
            double r = uniform_(rng_);
            if (r < 0.35) {
                emit(noun_with(&Noun::sg).sg);
            } else if (r < 0.5) {
                emit(noun_with(&Noun::pl).pl);
            } else if (r < 0.62) {
                emit(verb_with(&Verb::past).past);
            } else if (r < 0.7) {
                emit(verb_with(&Verb::base).base);
            } else if (r < 0.78) {
                emit(adjective());
            } else if (r < 0.86) {
                emit(zipf_pick(kPreps));
            } else if (r < 0.93) {
                emit(adverb());
            } else {
                emit(zipf_pick(kDetSg));
            }
        }
    }

    // --- lexicon dump -----------------------------------------------------

    std::vector<std::pair<std::string, std::string>> lexicon() const {
        std::map<std::string, std::string> tags;
        auto tag = [&](const char* form, const char* category) {
            if (form == nullptr) return;
            // Multi-token entries tag each token.
            std::string s(form);
            std::size_t start = 0;
            while (start < s.size()) {
                std::size_t space = s.find(' ', start);
                std::string piece = s.substr(start, space == std::string::npos ? space : space - start);
                tags.try_emplace(piece, category);
                if (space == std::string::npos) break;
                start = space + 1;
            }
        };
        auto tag_verb = [&](const Verb& v) {
            tag(v.base, "verb_base");
            tag(v.third, "verb_3sg");
            tag(v.past, "verb_past");
            tag(v.ing, "verb_ing");
        };
        auto tag_noun = [&](const Noun& n) {
            tag(n.sg, "noun_sg");
            tag(n.pl, "noun_pl");
            tag(n.poss, "noun_poss");
        };
        for (const Verb& v : verbs_) tag_verb(v);
        for (const Verb& v : family_verbs_) tag_verb(v);
        for (const Noun& n : nouns_) tag_noun(n);
        for (const Noun& n : family_nouns_) tag_noun(n);
        for (const char* a : adjs_) tag(a, "adj");
        for (const char* a : family_adjs_) tag(a, "adj");
        for (const char* a : family_advs_) tag(a, "adv");
        for (const char* w : kDetSg) tag(w, "det");
        for (const char* w : kDetPl) tag(w, "det");
        for (const char* w : kNumbers) tag(w, "num");
        for (const char* w : kPronSg) tag(w, "pron");
        for (const char* w : kPronPl) tag(w, "pron");
        for (const char* w : kPronObj) tag(w, "pron");
        for (const char* w : kPreps) tag(w, "prep");
        for (const char* w : kConj) tag(w, "conj");
        for (const char* w : kModals) tag(w, "aux");
        for (const char* w : kNegAux) tag(w, "aux");
        for (const char* w : kAdvDeg) tag(w, "adv_deg");
        for (const char* w : kAdvPlain) tag(w, "adv");
        for (const char* w : kInterject) tag(w, "adv");
        for (const char* w : {"is", "was", "are", "were", "there", "not"}) tag(w, "aux");
        for (const char* w : {"who", "that", "of", "and", "or"}) tag(w, "conj");
        return {tags.begin(), tags.end()};
    }

    std::map<const void*, Picker> zipf_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::uint64_t tokens_ = 0;
    std::string pending_;

    std::vector<Verb> verbs_, family_verbs_;
    std::vector<Noun> nouns_, family_nouns_;
    std::vector<const char*> adjs_, family_adjs_, al_adjs_, family_advs_;
    Picker pick_core_verb_, pick_family_verb_, pick_core_noun_, pick_family_noun_;
    Picker pick_core_adj_, pick_family_adj_, pick_family_adv_;
};

} // namespace

GeneratedCorpus generate_english(std::uint64_t target_tokens, std::uint64_t seed) {
    return Generator(seed).run(target_tokens);
}

} // namespace textgen
