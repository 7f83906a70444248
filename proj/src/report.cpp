#include "fbc/report.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "fbc/version.hpp"

namespace fbc {

namespace {

Word a_squared() { return Word::from_syllables({{Gen::a, 2}}); }

std::string weights_str(const std::vector<long long>& weights) {
    std::string out = "[";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights[i]);
    }
    return out + "]";
}

}  // namespace

std::vector<std::string> citation_notes(const AutomorphismSpec& spec, const Classification& c) {
    std::vector<std::string> notes;
    switch (c.reason) {
        case Reason::DirectProduct:
            notes.push_back("cat0:direct-product (identity twist, F3 x Z)");
            break;
        case Reason::NonzeroAbelianization:
            notes.push_back("criterion:fixed-rank2-factor (nonzero exponent sum)");
            break;
        case Reason::CommutatorObstruction:
            notes.push_back("obstruction:commutator (translation-length conflict on Min(t))");
            break;
        case Reason::Condition1:
            notes.push_back("criterion:quadratic-term (delta dips below 1 as theta -> 0)");
            break;
        case Reason::Condition2:
            notes.push_back("criterion:pi-limit (delta limit below 1 as theta -> pi)");
            break;
        case Reason::TotallyBalancedH1:
            notes.push_back("obstruction:totally-balanced-height1 (commutator conflict in <a, bab^-1>)");
            break;
        case Reason::NonBBalanced:
            notes.push_back("prior:nonzero-b-sum [Sam06] (not re-derived here)");
            break;
        case Reason::PowerOfA:
            notes.push_back("excluded:power-of-a (outside both criteria)");
            if (spec.twist_exponent == 1 && spec.twisting_word == a_squared())
                notes.push_back("example:gersten [Ger94] (b -> ba, c -> ca^2; known non-CAT(0))");
            break;
        case Reason::NoCriterionApplies:
            notes.push_back("open:no-criterion (undecided by the implemented tests)");
            break;
    }
    return notes;
}

Json profile_json(const LevelProfile& p) {
    Json j;
    j["height"] = p.height;
    j["starting_level"] = p.starting_level;
    j["weights"] = p.weights;
    j["balanced_flags"] = p.balanced_flags;
    j["totally_balanced"] = is_totally_balanced(p);
    return j;
}

Json classification_json(const Classification& c) {
    Json j;
    j["type"] = "classification";
    j["verdict"] = std::string(to_string(c.verdict));
    j["reason"] = std::string(to_string(c.reason));
    Json w = Json::object();
    if (c.witness.rotation) w["rotation"] = c.witness.rotation->str();
    if (c.witness.rotation_index) w["rotation_index"] = *c.witness.rotation_index;
    if (c.witness.profile) w["profile"] = profile_json(*c.witness.profile);
    if (c.reason == Reason::Condition1) {
        w["lhs"] = *c.witness.lhs;
        w["rhs"] = *c.witness.rhs;
    } else if (c.reason == Reason::Condition2) {
        w["alternating_sum"] = *c.witness.lhs;
        w["k"] = *c.witness.rhs;
    }
    if (c.witness.a_exponent_sum) w["exponent_sum_a"] = *c.witness.a_exponent_sum;
    if (c.witness.b_exponent_sum) w["exponent_sum_b"] = *c.witness.b_exponent_sum;
    if (c.reason == Reason::NonzeroAbelianization) {
        const long long na = *c.witness.a_exponent_sum;
        const long long nb = *c.witness.b_exponent_sum;
        const K0Suggestion s = suggest_k0_params(na != 0 ? na : nb);
        Json plane;
        plane["axis"] = na != 0 ? "a" : "b";
        plane["phi"] = s.params.phi;
        plane["a_len"] = s.params.a_len;
        plane["image_distance"] = s.image_distance;
        w["plane_suggestion"] = plane;
    }
    j["witness"] = w;
    return j;
}

Json certificate_json(const ThetaCertificate& cert) {
    Json j;
    j["type"] = "theta_certificate";
    j["theta"] = cert.theta;
    j["delta"] = cert.delta_value;
    j["epsilon"] = cert.epsilon;
    j["d_width"] = cert.d_width;
    j["displacement_bound"] = cert.displacement_bound;
    // epsilon may double before the walk bound spends the whole margin
    j["bilipschitz_at_doubling"] = bilipschitz_bound(cert.epsilon, cert.epsilon);
    return j;
}

Json survey_json(const SurveyReport& report) {
    Json j;
    j["type"] = "survey";
    j["max_length"] = report.max_length;
    j["k_range"] = report.k_range;
    j["word_classes"] = report.word_class_count;
    j["pairs"] = report.word_class_count * report.k_range.size();
    Json cells = Json::array();
    for (const auto& cell : report.cells) {
        Json c;
        c["verdict"] = std::string(to_string(cell.verdict));
        c["reason"] = std::string(to_string(cell.reason));
        c["count"] = cell.count;
        Json witnesses = Json::array();
        for (const auto& [k, w] : cell.witnesses) {
            Json item;
            item["k"] = k;
            item["w"] = w.str();
            witnesses.push_back(item);
        }
        c["witnesses"] = witnesses;
        cells.push_back(c);
    }
    j["cells"] = cells;
    return j;
}

Json envelope(Json input_echo, Json result, const std::vector<std::string>& notes) {
    Json j;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["schema_version"] = kSchemaVersion;
    j["input"] = std::move(input_echo);
    j["result"] = std::move(result);
    j["notes"] = notes;
    return j;
}

std::string classification_text(const AutomorphismSpec& spec, const Classification& c) {
    std::ostringstream out;
    out << "input: k=" << spec.twist_exponent << " w=" << spec.twisting_word.str() << "\n";
    out << "verdict: " << to_string(c.verdict) << "\n";
    out << "reason: " << to_string(c.reason) << "\n";
    if (c.witness.rotation) {
        const LevelProfile& p = *c.witness.profile;
        out << "witness: rotation=" << c.witness.rotation->str() << " (index "
            << *c.witness.rotation_index << "), h=" << p.height << ", j0=" << p.starting_level
            << ", N=" << weights_str(p.weights) << ", ";
        if (c.reason == Reason::Condition1)
            out << "lhs=" << *c.witness.lhs << " < rhs=" << *c.witness.rhs << "\n";
        else
            out << "0 < s=" << *c.witness.lhs << " < k=" << *c.witness.rhs << "\n";
    } else if (c.reason == Reason::TotallyBalancedH1 || c.reason == Reason::NoCriterionApplies) {
        const LevelProfile& p = *c.witness.profile;
        out << "profile: h=" << p.height << ", j0=" << p.starting_level
            << ", N=" << weights_str(p.weights) << "\n";
    } else if (c.witness.a_exponent_sum || c.witness.b_exponent_sum) {
        out << "exponent sums:";
        if (c.witness.a_exponent_sum) out << " a=" << *c.witness.a_exponent_sum;
        if (c.witness.b_exponent_sum) out << " b=" << *c.witness.b_exponent_sum;
        out << "\n";
    }
    for (const auto& note : citation_notes(spec, c)) out << "note: " << note << "\n";
    return out.str();
}

std::string level_diagram(const Word& w, const LevelProfile& p) {
    struct Item {
        int row;  // 0-based from the top of the canvas
        std::string text;
    };

    const int h = p.height;
    const int j0 = p.starting_level;
    const auto row_of_level = [&](long long level) { return 2 * (h - static_cast<int>(level)); };

    std::vector<Item> items;
    long long s = 0;
    for (const auto& syl : w.syllables()) {
        if (syl.gen == Gen::a) {
            items.push_back({row_of_level(s + j0), Word::from_syllables({syl}).str()});
        } else {
            const int step = syl.exp > 0 ? 1 : -1;
            for (long long i = 0; i < std::abs(syl.exp); ++i) {
                const long long low = std::min(s, s + step) + j0;
                items.push_back({row_of_level(low) - 1, step > 0 ? "b" : "B"});
                s += step;
            }
        }
    }

    std::vector<std::string> labels(static_cast<std::size_t>(2 * h + 1));
    for (int j = 0; j <= h; ++j) {
        std::string label = "level " + std::to_string(j);
        if (h > 0 && j == h) label += " (top)";
        if (h > 0 && j == 0) label += " (bottom)";
        labels[static_cast<std::size_t>(row_of_level(j))] = label;
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    label_width += 2;

    std::vector<std::string> lines(labels.size());
    for (std::size_t r = 0; r < lines.size(); ++r) {
        lines[r] = labels[r];
        lines[r].resize(label_width, ' ');
    }
    std::size_t x = label_width;
    for (const auto& item : items) {
        auto& line = lines[static_cast<std::size_t>(item.row)];
        if (line.size() < x) line.resize(x, ' ');
        line += item.text;
        x += item.text.size() + 1;
    }

    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string survey_table(const SurveyReport& report) {
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"verdict", "reason", "count", "witnesses"});
    for (const auto& cell : report.cells) {
        std::string wit;
        for (const auto& [k, w] : cell.witnesses) {
            if (!wit.empty()) wit += "  ";
            wit += "k=" + std::to_string(k) + " w=" + w.str();
        }
        rows.push_back({std::string(to_string(cell.verdict)), std::string(to_string(cell.reason)),
                        std::to_string(cell.count), wit});
    }

    std::array<std::size_t, 4> width{};
    for (const auto& row : rows)
        for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());

    std::ostringstream out;
    out << "survey: max_length=" << report.max_length << " k_range=";
    for (std::size_t i = 0; i < report.k_range.size(); ++i)
        out << (i ? "," : "") << report.k_range[i];
    out << " word_classes=" << report.word_class_count
        << " pairs=" << report.word_class_count * report.k_range.size() << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < 4; ++i) {
            std::string cell = row[i];
            if (i + 1 < 4) cell.resize(width[i] + 2, ' ');
            out << cell;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace fbc
