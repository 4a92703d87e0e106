#include "xssgen/token.hpp"

#include <algorithm>
#include <cctype>

#include "xssgen/errors.hpp"

namespace xssgen {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::StartTag: return "start_tag";
    case TokenKind::Attribute: return "attribute";
    case TokenKind::AttrValue: return "attr_value";
    case TokenKind::PlainText: return "plain_text";
    case TokenKind::EndTag: return "end_tag";
    case TokenKind::Comment: return "comment";
    }
    return "?";
}

TokenKind token_kind_from_name(const std::string& name) {
    if (name == "start_tag") return TokenKind::StartTag;
    if (name == "attribute") return TokenKind::Attribute;
    if (name == "attr_value") return TokenKind::AttrValue;
    if (name == "plain_text") return TokenKind::PlainText;
    if (name == "end_tag") return TokenKind::EndTag;
    if (name == "comment") return TokenKind::Comment;
    throw FormatError("unknown token kind: " + name);
}

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

TokenSymbol TokenSymbol::start_tag(std::string name) {
    return {TokenKind::StartTag, to_lower(std::move(name))};
}

TokenSymbol TokenSymbol::end_tag(std::string name) {
    return {TokenKind::EndTag, to_lower(std::move(name))};
}

TokenSymbol TokenSymbol::attribute(std::string name) {
    return {TokenKind::Attribute, to_lower(std::move(name))};
}

std::string TokenSymbol::str() const {
    return std::string(token_kind_name(kind)) + ":" + name;
}

TokenSymbol TokenSymbol::parse(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw FormatError("bad token symbol: " + text);
    TokenSymbol symbol;
    symbol.kind = token_kind_from_name(text.substr(0, colon));
    symbol.name = text.substr(colon + 1);
    if (symbol.name.empty()) throw FormatError("bad token symbol: " + text);
    bool class_kind = symbol.kind == TokenKind::AttrValue ||
                      symbol.kind == TokenKind::PlainText ||
                      symbol.kind == TokenKind::Comment;
    if (class_kind != (symbol.name == "*")) {
        throw FormatError("token symbol name does not match its kind: " + text);
    }
    if (!class_kind && symbol.name != to_lower(symbol.name)) {
        throw FormatError("token symbol name must be lowercase: " + text);
    }
    return symbol;
}

std::vector<TokenSymbol> TokenSequence::symbols() const {
    std::vector<TokenSymbol> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.symbol);
    return out;
}

void RawCorpus::add(const TokenSymbol& symbol, const std::string& raw, std::uint64_t count) {
    entries[symbol][raw] += count;
    total_count += count;
}

void RawCorpus::merge(const RawCorpus& other) {
    for (const auto& [symbol, raws] : other.entries) {
        for (const auto& [raw, count] : raws) add(symbol, raw, count);
    }
}

bool RawCorpus::contains(const TokenSymbol& symbol) const {
    auto it = entries.find(symbol);
    return it != entries.end() && !it->second.empty();
}

} // namespace xssgen
