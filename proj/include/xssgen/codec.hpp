#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace xssgen::codec {

// One decoding layer inside a combined pass. A pass always runs
// percent -> entity -> control-strip, in that order.
enum class Layer {
    Percent,
    Entity,
    ControlStrip,
};

const char* layer_name(Layer layer);

struct DecodeTrace {
    std::string input;
    std::string output;          // fixpoint: one further pass changes nothing
    int passes = 0;              // combined passes applied, including the confirming one
    std::vector<Layer> layers;   // layers that modified the string, in application order
};

inline constexpr int kDefaultMaxPasses = 8;

// Repeats combined decode passes until the string stops changing.
// Lenient: malformed percent/entity sequences pass through verbatim.
// Throws FixpointNotReached when max_passes is exhausted while the
// string is still changing.
DecodeTrace decode_fixpoint(const std::string& input, int max_passes = kDefaultMaxPasses);

enum class EncodeMode {
    PercentAll,      // every byte -> %XX
    PercentReserved, // every byte outside RFC 3986 unreserved -> %XX
    EntityNamed,     // < > " ' & = -> named entities
    EntityNumeric,   // < > " ' & = -> decimal entities
};

// Adds exactly one reversible encoding layer.
std::string encode(const std::string& input, EncodeMode mode);

// Single-layer helpers, exposed for the tokenizer-facing modules.
std::string percent_decode_once(const std::string& input);
std::string entity_decode_once(const std::string& input);
std::string strip_control_chars(const std::string& input);

} // namespace xssgen::codec
