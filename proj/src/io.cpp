#include "subcheck/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace subcheck {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    // Comment runs to end of line.
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos > start) tokens.emplace_back(line.substr(start, pos - start));
    }
    return tokens;
}

}  // namespace

ParsedList parse_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    std::optional<Universe> universe;
    std::size_t header_line = 0;
    std::vector<AltSet> members;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!universe) {
            // First content line: the universe, in index order.
            for (const auto& t : tokens) {
                if (t == "-")
                    throw ParseError(line_no, "'-' is reserved and cannot name an alternative");
            }
            try {
                universe.emplace(tokens);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            header_line = line_no;
            continue;
        }

        AltSet member(universe->size());
        if (tokens.size() == 1 && tokens[0] == "-") {
            members.push_back(std::move(member));
            continue;
        }
        for (const auto& t : tokens) {
            if (t == "-") throw ParseError(line_no, "'-' must stand alone on a member line");
            const auto idx = universe->index_of(t);
            if (!idx) throw ParseError(line_no, "unknown alternative '" + t + "'");
            member.set(*idx);
        }
        members.push_back(std::move(member));
    }

    if (!universe) throw ParseError(line_no, "missing universe line");
    (void)header_line;

    const std::uint32_t m = universe->size();
    return ParsedList{std::move(*universe), PreferenceList::normalize(std::move(members), m)};
}

ParsedList parse_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_list(in);
}

std::string serialize_list(const Universe& universe, const PreferenceList& list,
                           std::string_view header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) {
        std::size_t start = 0;
        while (start <= header_comment.size()) {
            const std::size_t nl = header_comment.find('\n', start);
            const auto piece = header_comment.substr(
                start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            out << "# " << piece << '\n';
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
    }
    for (std::uint32_t i = 0; i < universe.size(); ++i) {
        if (i) out << ' ';
        out << universe.name(i);
    }
    out << '\n';
    for (const AltSet& member : list.members()) {
        if (member.empty()) {
            out << "-\n";
            continue;
        }
        bool first = true;
        member.for_each([&](std::uint32_t e) {
            if (!first) out << ' ';
            out << universe.name(e);
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

std::string outcome_token(Outcome outcome) {
    switch (outcome) {
        case Outcome::Substitutable: return "substitutable";
        case Outcome::NotSubstitutable: return "not_substitutable";
        case Outcome::NotCoherent: return "not_coherent";
    }
    return "?";
}

std::string mode_token(CheckerMode mode) {
    return mode == CheckerMode::figure1 ? "figure1" : "witness";
}

nlohmann::json set_names_json(const Universe& universe, const AltSet& set) {
    auto names = nlohmann::json::array();
    set.for_each([&](std::uint32_t e) { names.push_back(universe.name(e)); });
    return names;
}

nlohmann::json report_json(const Universe& universe, const PreferenceList& list,
                           const Verdict& verdict, CheckerMode mode, std::int64_t elapsed_ns) {
    nlohmann::json j;
    j["verdict"] = outcome_token(verdict.outcome);
    j["coherent"] = verdict.coherent;
    if (verdict.complete)
        j["complete"] = *verdict.complete;
    else
        j["complete"] = nullptr;
    j["n"] = list.size();
    j["universe_size"] = universe.size();
    j["empty_appended"] = list.empty_appended();
    j["algorithm"] = verdict.algorithm;
    j["mode"] = mode_token(mode);
    if (verdict.witness) {
        const Witness& w = *verdict.witness;
        j["witness"] = {{"X", set_names_json(universe, list.member(w.x_rank))},
                        {"Y", set_names_json(universe, list.member(w.y_rank))},
                        {"x", universe.name(w.x_elem)}};
    } else {
        j["witness"] = nullptr;
    }
    if (verdict.violation) {
        const Violation& v = *verdict.violation;
        j["violation"] = {{"A", set_names_json(universe, v.a)},
                          {"B", set_names_json(universe, v.b)},
                          {"x", universe.name(v.x_elem)}};
    } else {
        j["violation"] = nullptr;
    }
    j["elapsed_ns"] = elapsed_ns;
    return j;
}

namespace {

std::string set_text(const Universe& universe, const AltSet& set) {
    if (set.empty()) return "{}";
    std::string out = "{";
    bool first = true;
    set.for_each([&](std::uint32_t e) {
        if (!first) out += ' ';
        out += universe.name(e);
        first = false;
    });
    out += '}';
    return out;
}

}  // namespace

std::string report_text(const Universe& universe, const PreferenceList& list,
                        const Verdict& verdict, CheckerMode mode, std::int64_t elapsed_ns) {
    std::ostringstream out;
    out << "verdict: " << outcome_token(verdict.outcome) << '\n';
    out << "algorithm: " << verdict.algorithm << "  mode: " << mode_token(mode) << '\n';
    out << "coherent: " << (verdict.coherent ? "yes" : "no");
    if (verdict.coherence_violation) {
        const auto& p = *verdict.coherence_violation;
        out << "  (member #" << p.i << ' ' << set_text(universe, list.member(p.i))
            << " precedes and is contained in member #" << p.j << ' '
            << set_text(universe, list.member(p.j)) << ')';
    }
    out << '\n';
    if (verdict.complete) {
        out << "complete: " << (*verdict.complete ? "yes" : "no");
        if (verdict.incompleteness) {
            const auto& c = *verdict.incompleteness;
            out << "  (member #" << c.rank << ' ' << set_text(universe, list.member(c.rank))
                << " has " << c.d << " subset members, expected ";
            if (c.required)
                out << *c.required;
            else
                out << "more than the list holds";
            out << ')';
        }
        out << '\n';
    } else {
        out << "complete: not determined\n";
    }
    if (verdict.witness) {
        const Witness& w = *verdict.witness;
        out << "witness: X=" << set_text(universe, list.member(w.x_rank))
            << "  Y=" << set_text(universe, list.member(w.y_rank))
            << "  x=" << universe.name(w.x_elem) << '\n';
    }
    if (verdict.violation) {
        const Violation& v = *verdict.violation;
        out << "violation: A=" << set_text(universe, v.a) << "  B=" << set_text(universe, v.b)
            << "  x=" << universe.name(v.x_elem) << '\n';
    }
    out << "n: " << list.size() << "  universe: " << universe.size()
        << "  elapsed_ns: " << elapsed_ns << '\n';
    return out.str();
}

}  // namespace subcheck
