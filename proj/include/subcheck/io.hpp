#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "subcheck/preference_list.hpp"
#include "subcheck/universe.hpp"
#include "subcheck/verdict.hpp"

namespace subcheck {

// List file format:
//   - first content line: whitespace-separated alternative names, defining
//     the universe and its index order
//   - each following content line: one member, names separated by
//     whitespace, or the single token `-` for the empty set
//   - `#` starts a comment to end of line; blank lines are ignored
//   - members appear in preference order, most preferred first

struct ParsedList {
    Universe universe;
    PreferenceList list;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

ParsedList parse_list(std::istream& in);
ParsedList parse_list_text(std::string_view text);

// Inverse of parse_list up to the appended empty set; header_comment lines
// (if any) are emitted first, each prefixed with "# ".
std::string serialize_list(const Universe& universe, const PreferenceList& list,
                           std::string_view header_comment = {});

std::string outcome_token(Outcome outcome);  // "substitutable" | ...
std::string mode_token(CheckerMode mode);    // "figure1" | "witness"

nlohmann::json set_names_json(const Universe& universe, const AltSet& set);

// The check report: verdict, coherent, complete (null when undetermined),
// n, universe_size, empty_appended, algorithm, mode, witness, violation,
// elapsed_ns. Set fields are name arrays sorted by universe index.
nlohmann::json report_json(const Universe& universe, const PreferenceList& list,
                           const Verdict& verdict, CheckerMode mode, std::int64_t elapsed_ns);

// Human-readable form of the same report.
std::string report_text(const Universe& universe, const PreferenceList& list,
                        const Verdict& verdict, CheckerMode mode, std::int64_t elapsed_ns);

}  // namespace subcheck
