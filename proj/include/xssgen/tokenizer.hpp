#pragma once

#include <string>

#include "xssgen/token.hpp"

namespace xssgen::tokenizer {

// Lenient, browser-like lexer over a decoded attack string. Total: any
// input yields a sequence; unterminated constructs are emitted with
// whatever was seen. Inside a tag a single '/' acts as a separator
// between attributes (the iframe/src idiom) and is kept on the
// attribute raw so generation can reproduce it.
TokenSequence tokenize(const std::string& attack);

// Adds every token's raw to the corpus under its symbol.
void absorb(RawCorpus& corpus, const TokenSequence& sequence);

} // namespace xssgen::tokenizer
