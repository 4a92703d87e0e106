#include "xssgen/tokenizer.hpp"

#include <cctype>

#include "xssgen/errors.hpp"

namespace xssgen::tokenizer {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// '<' opens a construct only before a tag-name letter, "/name" or "!--".
bool opens_construct(const std::string& s, std::size_t i) {
    if (s[i] != '<' || i + 1 >= s.size()) return false;
    char next = s[i + 1];
    if (is_letter(next)) return true;
    if (next == '/' && i + 2 < s.size() && is_letter(s[i + 2])) return true;
    if (next == '!' && i + 3 < s.size() && s[i + 2] == '-' && s[i + 3] == '-') return true;
    return false;
}

class Lexer {
public:
    explicit Lexer(const std::string& source) : s_(source) {}

    TokenSequence run() {
        TokenSequence seq;
        seq.source = s_;
        while (i_ < s_.size()) {
            if (opens_construct(s_, i_)) {
                if (s_[i_ + 1] == '!') {
                    lex_comment(seq);
                } else {
                    lex_tag(seq);
                }
            } else {
                lex_plain_text(seq);
            }
        }
        return seq;
    }

private:
    void emit(TokenSequence& seq, TokenSymbol symbol, std::size_t begin, std::size_t end) {
        if (end <= begin) return; // never emit empty raws
        seq.tokens.push_back({std::move(symbol), s_.substr(begin, end - begin), begin, end});
    }

    void lex_plain_text(TokenSequence& seq) {
        std::size_t begin = i_;
        while (i_ < s_.size() && !opens_construct(s_, i_)) ++i_;
        emit(seq, TokenSymbol::plain_text(), begin, i_);
    }

    void lex_comment(TokenSequence& seq) {
        std::size_t content = i_ + 4; // past "<!--"
        std::size_t close = s_.find("-->", content);
        if (close == std::string::npos) {
            emit(seq, TokenSymbol::comment(), content, s_.size());
            i_ = s_.size();
        } else {
            emit(seq, TokenSymbol::comment(), content, close);
            i_ = close + 3;
        }
    }

    void lex_tag(TokenSequence& seq) {
        bool end_tag = s_[i_ + 1] == '/';
        std::size_t name_begin = i_ + (end_tag ? 2 : 1);
        std::size_t j = name_begin;
        while (j < s_.size() && !is_space(s_[j]) && s_[j] != '/' && s_[j] != '>') ++j;
        std::string name = s_.substr(name_begin, j - name_begin);
        emit(seq,
             end_tag ? TokenSymbol::end_tag(name) : TokenSymbol::start_tag(name),
             name_begin, j);
        i_ = j;
        lex_attributes(seq);
    }

    // After the tag name: attributes separated by whitespace or '/', until
    // '>' or end of input. A single '/' immediately before an attribute
    // name is kept on the raw so the corpus records the separator style.
    void lex_attributes(TokenSequence& seq) {
        while (i_ < s_.size()) {
            bool slash_before = false;
            while (i_ < s_.size() && (is_space(s_[i_]) || s_[i_] == '/')) {
                slash_before = s_[i_] == '/';
                ++i_;
            }
            if (i_ >= s_.size()) return;
            if (s_[i_] == '>') {
                ++i_;
                return;
            }
            if (s_[i_] == '=') {
                ++i_; // stray '=' without a name: value still lexed below
            } else {
                std::size_t name_begin = i_;
                while (i_ < s_.size() && !is_space(s_[i_]) && s_[i_] != '/' &&
                       s_[i_] != '>' && s_[i_] != '=') {
                    ++i_;
                }
                std::size_t raw_begin = slash_before ? name_begin - 1 : name_begin;
                Token token;
                token.symbol = TokenSymbol::attribute(s_.substr(name_begin, i_ - name_begin));
                token.raw = s_.substr(raw_begin, i_ - raw_begin);
                token.begin = raw_begin;
                token.end = i_;
                seq.tokens.push_back(std::move(token));
                while (i_ < s_.size() && is_space(s_[i_])) ++i_;
                if (i_ >= s_.size() || s_[i_] != '=') continue;
                ++i_;
            }
            while (i_ < s_.size() && is_space(s_[i_])) ++i_;
            lex_attr_value(seq);
        }
    }

    void lex_attr_value(TokenSequence& seq) {
        if (i_ >= s_.size()) return;
        char quote = s_[i_];
        if (quote == '"' || quote == '\'') {
            std::size_t begin = i_;
            std::size_t close = s_.find(quote, i_ + 1);
            std::size_t end = close == std::string::npos ? s_.size() : close + 1;
            emit(seq, TokenSymbol::attr_value(), begin, end); // raw keeps the quotes
            i_ = end;
            return;
        }
        std::size_t begin = i_;
        while (i_ < s_.size() && !is_space(s_[i_]) && s_[i_] != '>') ++i_;
        emit(seq, TokenSymbol::attr_value(), begin, i_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace

TokenSequence tokenize(const std::string& attack) {
    if (attack.empty()) {
        throw Error(ErrorKind::Data, "tokenize: input must be non-empty");
    }
    return Lexer(attack).run();
}

void absorb(RawCorpus& corpus, const TokenSequence& sequence) {
    for (const Token& token : sequence.tokens) {
        corpus.add(token.symbol, token.raw);
    }
}

} // namespace xssgen::tokenizer
