#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grsdual/construct.hpp"

namespace grsdual {

/// A code-spec file could not be parsed or fails validation.
class SpecParseError : public std::runtime_error {
public:
    explicit SpecParseError(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk description of a constructed code. Elements are stored as
/// canonical integer encodings together with the full field model, so a
/// file stays valid independently of how fields are derived from (p, m).
struct CodeSpecFile {
    static constexpr std::uint32_t kVersion = 1;

    std::uint32_t version = kVersion;
    // field
    std::uint32_t p = 0, m = 0;
    std::vector<std::uint32_t> modulus;  // constant term first
    std::uint32_t g_enc = 0;
    // construction metadata
    CodeKind kind = CodeKind::selfdual;
    PlanCase tag = PlanCase::thm1_i;
    std::uint32_t r = 0, s = 0, t = 0;
    // code
    std::uint32_t n = 0, k = 0;
    bool extended = false;
    std::vector<std::uint32_t> a_enc, v_enc;
    std::optional<std::vector<std::vector<std::uint32_t>>> matrix;
};

CodeSpecFile make_codespec(const Construction& built, CodeKind kind, bool with_matrix);

/// Serialization is canonical: serialize(parse(serialize(x))) is
/// byte-identical to serialize(x).
std::string to_json(const CodeSpecFile& spec);
CodeSpecFile from_json(const std::string& text);

/// The file's field and code, reconstructed and revalidated.
struct RealizedCode {
    std::unique_ptr<Field> field;
    std::optional<GrsCode> code;  // references *field
};
RealizedCode realize(const CodeSpecFile& spec);

}  // namespace grsdual
