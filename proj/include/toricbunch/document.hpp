#ifndef TORICBUNCH_DOCUMENT_HPP
#define TORICBUNCH_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "toricbunch/bunch.hpp"
#include "toricbunch/fan.hpp"

namespace toric {

// On-disk unit: a named bunch or fan.  Payloads are verified on load, so
// holding a Document means holding valid data.
struct Document {
    std::string kind;  // "bunch" or "fan"
    std::string name;
    std::string comment;
    std::optional<Bunch> bunch;
    std::optional<Fan> fan;
};

Document parse_document(const std::string& json_text);  // throws ParseError
Document load_document(const std::string& path);
std::string serialize(const Document& doc);

Document make_bunch_document(const Bunch& b, const std::string& name,
                             const std::string& comment = "");
Document make_fan_document(const Fan& f, const std::string& name,
                           const std::string& comment = "");

// Built-in example documents; names: p123, p1355, ex34, ex47, oda,
// eikelberg-delta, eikelberg-delta-prime.
std::vector<std::string> builtin_example_names();
Document builtin_example(const std::string& name);  // throws InvalidParameters

struct UnknownExample : std::runtime_error {
    explicit UnknownExample(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric

#endif
