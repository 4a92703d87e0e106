#include "xssgen/codec.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>

#include "xssgen/errors.hpp"

namespace xssgen::codec {

namespace {

struct NamedEntity {
    const char* name;
    std::uint32_t codepoint;
};

// HTML4 named set plus the punctuation names attackers lean on; matched
// with or without the trailing semicolon (archives routinely omit it).
constexpr NamedEntity kNamedEntities[] = {
    // Markup-significant and legacy uppercase variants.
    {"quot", 34}, {"QUOT", 34}, {"amp", 38}, {"AMP", 38}, {"apos", 39},
    {"lt", 60}, {"LT", 60}, {"gt", 62}, {"GT", 62},
    // Printable ASCII punctuation.
    {"excl", 33}, {"num", 35}, {"dollar", 36}, {"percnt", 37}, {"lpar", 40},
    {"rpar", 41}, {"ast", 42}, {"plus", 43}, {"comma", 44}, {"period", 46},
    {"sol", 47}, {"colon", 58}, {"semi", 59}, {"equals", 61}, {"quest", 63},
    {"commat", 64}, {"lbrack", 91}, {"bsol", 92}, {"rbrack", 93}, {"Hat", 94},
    {"lowbar", 95}, {"grave", 96}, {"lbrace", 123}, {"verbar", 124}, {"rbrace", 125},
    {"Tab", 9}, {"NewLine", 10},
    // Latin-1.
    {"nbsp", 160}, {"iexcl", 161}, {"cent", 162}, {"pound", 163}, {"curren", 164},
    {"yen", 165}, {"brvbar", 166}, {"sect", 167}, {"uml", 168}, {"copy", 169},
    {"COPY", 169}, {"ordf", 170}, {"laquo", 171}, {"not", 172}, {"shy", 173},
    {"reg", 174}, {"REG", 174}, {"macr", 175}, {"deg", 176}, {"plusmn", 177},
    {"sup2", 178}, {"sup3", 179}, {"acute", 180}, {"micro", 181}, {"para", 182},
    {"middot", 183}, {"cedil", 184}, {"sup1", 185}, {"ordm", 186}, {"raquo", 187},
    {"frac14", 188}, {"frac12", 189}, {"frac34", 190}, {"iquest", 191},
    {"Agrave", 192}, {"Aacute", 193}, {"Acirc", 194}, {"Atilde", 195}, {"Auml", 196},
    {"Aring", 197}, {"AElig", 198}, {"Ccedil", 199}, {"Egrave", 200}, {"Eacute", 201},
    {"Ecirc", 202}, {"Euml", 203}, {"Igrave", 204}, {"Iacute", 205}, {"Icirc", 206},
    {"Iuml", 207}, {"ETH", 208}, {"Ntilde", 209}, {"Ograve", 210}, {"Oacute", 211},
    {"Ocirc", 212}, {"Otilde", 213}, {"Ouml", 214}, {"times", 215}, {"Oslash", 216},
    {"Ugrave", 217}, {"Uacute", 218}, {"Ucirc", 219}, {"Uuml", 220}, {"Yacute", 221},
    {"THORN", 222}, {"szlig", 223}, {"agrave", 224}, {"aacute", 225}, {"acirc", 226},
    {"atilde", 227}, {"auml", 228}, {"aring", 229}, {"aelig", 230}, {"ccedil", 231},
    {"egrave", 232}, {"eacute", 233}, {"ecirc", 234}, {"euml", 235}, {"igrave", 236},
    {"iacute", 237}, {"icirc", 238}, {"iuml", 239}, {"eth", 240}, {"ntilde", 241},
    {"ograve", 242}, {"oacute", 243}, {"ocirc", 244}, {"otilde", 245}, {"ouml", 246},
    {"divide", 247}, {"oslash", 248}, {"ugrave", 249}, {"uacute", 250}, {"ucirc", 251},
    {"uuml", 252}, {"yacute", 253}, {"thorn", 254}, {"yuml", 255},
    // Latin extended / punctuation block.
    {"OElig", 338}, {"oelig", 339}, {"Scaron", 352}, {"scaron", 353}, {"Yuml", 376},
    {"fnof", 402}, {"circ", 710}, {"tilde", 732}, {"ensp", 8194}, {"emsp", 8195},
    {"thinsp", 8201}, {"zwnj", 8204}, {"zwj", 8205}, {"lrm", 8206}, {"rlm", 8207},
    {"ndash", 8211}, {"mdash", 8212}, {"lsquo", 8216}, {"rsquo", 8217}, {"sbquo", 8218},
    {"ldquo", 8220}, {"rdquo", 8221}, {"bdquo", 8222}, {"dagger", 8224}, {"Dagger", 8225},
    {"bull", 8226}, {"hellip", 8230}, {"permil", 8240}, {"prime", 8242}, {"Prime", 8243},
    {"lsaquo", 8249}, {"rsaquo", 8250}, {"oline", 8254}, {"frasl", 8260}, {"euro", 8364},
    // Greek.
    {"Alpha", 913}, {"Beta", 914}, {"Gamma", 915}, {"Delta", 916}, {"Epsilon", 917},
    {"Zeta", 918}, {"Eta", 919}, {"Theta", 920}, {"Iota", 921}, {"Kappa", 922},
    {"Lambda", 923}, {"Mu", 924}, {"Nu", 925}, {"Xi", 926}, {"Omicron", 927},
    {"Pi", 928}, {"Rho", 929}, {"Sigma", 931}, {"Tau", 932}, {"Upsilon", 933},
    {"Phi", 934}, {"Chi", 935}, {"Psi", 936}, {"Omega", 937},
    {"alpha", 945}, {"beta", 946}, {"gamma", 947}, {"delta", 948}, {"epsilon", 949},
    {"zeta", 950}, {"eta", 951}, {"theta", 952}, {"iota", 953}, {"kappa", 954},
    {"lambda", 955}, {"mu", 956}, {"nu", 957}, {"xi", 958}, {"omicron", 959},
    {"pi", 960}, {"rho", 961}, {"sigmaf", 962}, {"sigma", 963}, {"tau", 964},
    {"upsilon", 965}, {"phi", 966}, {"chi", 967}, {"psi", 968}, {"omega", 969},
    {"thetasym", 977}, {"upsih", 978}, {"piv", 982},
    // Mathematical and misc symbols.
    {"weierp", 8472}, {"image", 8465}, {"real", 8476}, {"trade", 8482}, {"TRADE", 8482},
    {"alefsym", 8501}, {"larr", 8592}, {"uarr", 8593}, {"rarr", 8594}, {"darr", 8595},
    {"harr", 8596}, {"crarr", 8629}, {"lArr", 8656}, {"uArr", 8657}, {"rArr", 8658},
    {"dArr", 8659}, {"hArr", 8660}, {"forall", 8704}, {"part", 8706}, {"exist", 8707},
    {"empty", 8709}, {"nabla", 8711}, {"isin", 8712}, {"notin", 8713}, {"ni", 8715},
    {"prod", 8719}, {"sum", 8721}, {"minus", 8722}, {"lowast", 8727}, {"radic", 8730},
    {"prop", 8733}, {"infin", 8734}, {"ang", 8736}, {"and", 8743}, {"or", 8744},
    {"cap", 8745}, {"cup", 8746}, {"int", 8747}, {"there4", 8756}, {"sim", 8764},
    {"cong", 8773}, {"asymp", 8776}, {"ne", 8800}, {"equiv", 8801}, {"le", 8804},
    {"ge", 8805}, {"sub", 8834}, {"sup", 8835}, {"nsub", 8836}, {"sube", 8838},
    {"supe", 8839}, {"oplus", 8853}, {"otimes", 8855}, {"perp", 8869}, {"sdot", 8901},
    {"lceil", 8968}, {"rceil", 8969}, {"lfloor", 8970}, {"rfloor", 8971}, {"lang", 9001},
    {"rang", 9002}, {"loz", 9674}, {"spades", 9824}, {"clubs", 9827}, {"hearts", 9829},
    {"diams", 9830},
};

struct EntityTable {
    std::unordered_map<std::string, std::uint32_t> by_name;
    std::size_t max_name_length = 0;
};

const EntityTable& entity_table() {
    static const EntityTable table = [] {
        EntityTable t;
        for (const auto& e : kNamedEntities) {
            t.by_name.emplace(e.name, e.codepoint);
            std::size_t n = std::string(e.name).size();
            if (n > t.max_name_length) t.max_name_length = n;
        }
        return t;
    }();
    return table;
}

bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return c - 'A' + 10;
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ascii_alnum(char c) {
    return is_ascii_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

void append_utf8(std::string& out, std::uint32_t cp) {
    // Invalid codepoints map to U+FFFD, mirroring browser recovery.
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_stripped_control(unsigned char c) {
    return c <= 0x08 || c == 0x0B || c == 0x0C || (c >= 0x0E && c <= 0x1F);
}

} // namespace

const char* layer_name(Layer layer) {
    switch (layer) {
    case Layer::Percent: return "percent";
    case Layer::Entity: return "entity";
    case Layer::ControlStrip: return "control-strip";
    }
    return "?";
}

std::string percent_decode_once(const std::string& input) {
    std::string out;
    out.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        char c = input[i];
        if (c == '%' && i + 2 < input.size() && is_hex_digit(input[i + 1]) &&
            is_hex_digit(input[i + 2])) {
            out.push_back(static_cast<char>(hex_value(input[i + 1]) * 16 +
                                            hex_value(input[i + 2])));
            i += 2;
        } else {
            out.push_back(c); // lone or malformed '%' passes through
        }
    }
    return out;
}

std::string entity_decode_once(const std::string& input) {
    const EntityTable& table = entity_table();
    std::string out;
    out.reserve(input.size());
    std::size_t i = 0;
    while (i < input.size()) {
        if (input[i] != '&' || i + 1 >= input.size()) {
            out.push_back(input[i++]);
            continue;
        }
        std::size_t j = i + 1;
        if (input[j] == '#') {
            ++j;
            bool hex = j < input.size() && (input[j] == 'x' || input[j] == 'X');
            if (hex) ++j;
            std::size_t digits_begin = j;
            std::uint64_t value = 0;
            while (j < input.size() &&
                   (hex ? is_hex_digit(input[j]) : is_ascii_digit(input[j]))) {
                if (value <= 0x10FFFF) {
                    value = hex ? value * 16 + hex_value(input[j])
                                : value * 10 + (input[j] - '0');
                }
                ++j;
            }
            if (j == digits_begin) {
                out.push_back(input[i++]); // "&#" with no digits stays literal
                continue;
            }
            if (j < input.size() && input[j] == ';') ++j;
            append_utf8(out, value > 0x10FFFF ? 0xFFFFFFFFu
                                              : static_cast<std::uint32_t>(value));
            i = j;
            continue;
        }
        // Named entity: longest alphanumeric run that names a known entity.
        std::size_t run_end = i + 1;
        while (run_end < input.size() && run_end - (i + 1) < table.max_name_length &&
               is_ascii_alnum(input[run_end])) {
            ++run_end;
        }
        bool matched = false;
        for (std::size_t len = run_end - (i + 1); len >= 2 && !matched; --len) {
            auto it = table.by_name.find(input.substr(i + 1, len));
            if (it == table.by_name.end()) continue;
            append_utf8(out, it->second);
            i = i + 1 + len;
            if (i < input.size() && input[i] == ';') ++i;
            matched = true;
        }
        if (!matched) out.push_back(input[i++]);
    }
    return out;
}

std::string strip_control_chars(const std::string& input) {
    std::string out;
    out.reserve(input.size());
    for (char c : input) {
        if (!is_stripped_control(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

DecodeTrace decode_fixpoint(const std::string& input, int max_passes) {
    if (max_passes < 1) throw Error(ErrorKind::Usage, "decode: max_passes must be >= 1");

    DecodeTrace trace;
    trace.input = input;
    std::string current = input;
    for (int pass = 1; pass <= max_passes; ++pass) {
        bool changed = false;

        std::string next = percent_decode_once(current);
        if (next != current) {
            trace.layers.push_back(Layer::Percent);
            changed = true;
        }
        current = std::move(next);

        next = entity_decode_once(current);
        if (next != current) {
            trace.layers.push_back(Layer::Entity);
            changed = true;
        }
        current = std::move(next);

        next = strip_control_chars(current);
        if (next != current) {
            trace.layers.push_back(Layer::ControlStrip);
            changed = true;
        }
        current = std::move(next);

        if (!changed) {
            trace.passes = pass;
            trace.output = std::move(current);
            return trace;
        }
    }
    throw FixpointNotReached("decode: no fixpoint within " + std::to_string(max_passes) +
                             " passes");
}

namespace {

const char kHexDigits[] = "0123456789ABCDEF";

void append_percent(std::string& out, unsigned char byte) {
    out.push_back('%');
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0x0F]);
}

bool is_unreserved(unsigned char c) {
    return is_ascii_alnum(static_cast<char>(c)) || c == '-' || c == '.' || c == '_' ||
           c == '~';
}

// Only the HTML-significant set is entity-encoded.
const char* named_form(char c) {
    switch (c) {
    case '<': return "&lt;";
    case '>': return "&gt;";
    case '"': return "&quot;";
    case '\'': return "&apos;";
    case '&': return "&amp;";
    case '=': return "&equals;";
    default: return nullptr;
    }
}

bool is_entity_significant(char c) { return named_form(c) != nullptr; }

} // namespace

std::string encode(const std::string& input, EncodeMode mode) {
    std::string out;
    out.reserve(input.size() * 3);
    for (char c : input) {
        unsigned char byte = static_cast<unsigned char>(c);
        switch (mode) {
        case EncodeMode::PercentAll:
            append_percent(out, byte);
            break;
        case EncodeMode::PercentReserved:
            if (is_unreserved(byte)) {
                out.push_back(c);
            } else {
                append_percent(out, byte);
            }
            break;
        case EncodeMode::EntityNamed:
            if (is_entity_significant(c)) {
                out += named_form(c);
            } else {
                out.push_back(c);
            }
            break;
        case EncodeMode::EntityNumeric:
            if (is_entity_significant(c)) {
                out += "&#" + std::to_string(static_cast<int>(byte)) + ";";
            } else {
                out.push_back(c);
            }
            break;
        }
    }
    return out;
}

} // namespace xssgen::codec
