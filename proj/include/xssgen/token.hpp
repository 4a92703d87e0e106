#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace xssgen {

// The six lexical classes an attack string decomposes into.
enum class TokenKind {
    StartTag,
    Attribute,
    AttrValue,
    PlainText,
    EndTag,
    Comment,
};

const char* token_kind_name(TokenKind kind);
TokenKind token_kind_from_name(const std::string& name);

// A typed lexical unit: the terminal alphabet of the structure model.
// Named kinds (start_tag/end_tag/attribute) carry the lowercased name;
// the class kinds (attr_value/plain_text/comment) use the fixed marker "*".
struct TokenSymbol {
    TokenKind kind = TokenKind::PlainText;
    std::string name = "*";

    auto operator<=>(const TokenSymbol&) const = default;

    static TokenSymbol start_tag(std::string name);
    static TokenSymbol end_tag(std::string name);
    static TokenSymbol attribute(std::string name);
    static TokenSymbol attr_value() { return {TokenKind::AttrValue, "*"}; }
    static TokenSymbol plain_text() { return {TokenKind::PlainText, "*"}; }
    static TokenSymbol comment() { return {TokenKind::Comment, "*"}; }

    // "kind:name", e.g. "start_tag:script" or "plain_text:*".
    std::string str() const;
    static TokenSymbol parse(const std::string& text);
};

struct Token {
    TokenSymbol symbol;
    std::string raw;        // original substring, case preserved
    std::size_t begin = 0;  // byte offsets into the source
    std::size_t end = 0;
};

struct TokenSequence {
    std::vector<Token> tokens;
    std::string source;

    std::vector<TokenSymbol> symbols() const;
};

// Multiset of original substrings per token symbol; the lexical material
// the generator draws from.
struct RawCorpus {
    std::map<TokenSymbol, std::map<std::string, std::uint64_t>> entries;
    std::uint64_t total_count = 0;

    void add(const TokenSymbol& symbol, const std::string& raw, std::uint64_t count = 1);
    void merge(const RawCorpus& other);
    bool contains(const TokenSymbol& symbol) const;
};

} // namespace xssgen
