#include "cledger/constants.hpp"

#include "cledger/expression.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cledger {

// Generated from data/constants.cgs at build time.
extern const char* const kDefaultConstantsText;

namespace {

const std::vector<std::string>& required_keys() {
    static const std::vector<std::string> keys = {
        "hbar", "c", "G", "e", "m_pi", "m_e", "m_p", "m_planck",
        "l_pi", "tau_pi", "R_obs", "T_obs", "H_obs", "rho_obs",
        "N", "N_nu", "m_nu", "rho_planck", "l_planck", "tau_planck"};
    return keys;
}

// Recomputation rules for derived entries, keyed by name. Expressions are
// evaluated against the stated (measured/paper) values in the same file.
const std::vector<std::pair<std::string, std::string>>& derivation_rules() {
    static const std::vector<std::pair<std::string, std::string>> rules = {
        {"l_pi", "hbar / (m_pi * c)"},
        {"tau_pi", "hbar / (m_pi * c^2)"},
        {"l_planck", "(hbar * G / c^3)^1/2"},
        {"tau_planck", "(hbar * G / c^5)^1/2"},
        {"rho_planck", "m_planck / (hbar * G / c^3)^3/2"},
        {"m_nu", "1e-8 * m_e"},
        {"m_w", "100 * m_p"},
        {"l_w", "hbar / (100 * m_p * c)"},
        {"g2_nu", "m_nu * c^2 / (sqrt(N_nu) * (hbar / (100 * m_p * c))^2)"},
        {"m_quark", "1e3 * m_e"},
    };
    return rules;
}

const std::string* derivation_for(const std::string& name) {
    for (const auto& [key, expr] : derivation_rules())
        if (key == name) return &expr;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& msg) {
    throw Error("line " + std::to_string(line_no) + ": " + msg);
}

// unit-expr: product of g/cm/s/esu tokens with optional ^int or ^int/int;
// "1" denotes dimensionless.
Dimension parse_unit_expr(const std::string& text, std::size_t line_no) {
    std::istringstream in(text);
    std::string token;
    Dimension dim;
    bool any = false;
    while (in >> token) {
        any = true;
        if (token == "1") continue;
        std::string base = token;
        Rational exp(1);
        const auto caret = token.find('^');
        if (caret != std::string::npos) {
            base = token.substr(0, caret);
            try {
                exp = Rational::parse(token.substr(caret + 1));
            } catch (const Error&) {
                line_error(line_no, "malformed unit exponent in '" + token + "'");
            }
        }
        Dimension unit;
        if (base == "g") unit = Dimension::mass();
        else if (base == "cm") unit = Dimension::length();
        else if (base == "s") unit = Dimension::time();
        else if (base == "esu") unit = Dimension::esu();
        else line_error(line_no, "unknown unit token '" + base + "'");
        dim = dim * unit.pow(exp);
    }
    if (!any) line_error(line_no, "missing unit expression");
    return dim;
}

Provenance parse_provenance(const std::string& text, std::size_t line_no) {
    if (text == "measured") return Provenance::measured;
    if (text == "paper") return Provenance::paper;
    if (text == "derived") return Provenance::derived;
    line_error(line_no, "unknown provenance '" + text + "'");
}

std::string format_magnitude(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
    case Provenance::measured: return "measured";
    case Provenance::paper: return "paper";
    case Provenance::derived: return "derived";
    }
    return "measured";
}

std::string content_hash(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

void ConstantsTable::add(ConstantEntry entry) {
    if (index_.count(entry.name))
        throw Error("duplicate constant name: " + entry.name);
    index_[entry.name] = entries_.size();
    entries_.push_back(std::move(entry));
}

const Quantity* ConstantsTable::find(const std::string& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].value;
}

const Quantity& ConstantsTable::get(const std::string& name) const {
    const Quantity* q = find(name);
    if (!q) throw Error("missing required key " + name);
    return *q;
}

const ConstantEntry& ConstantsTable::entry(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw Error("missing required key " + name);
    return entries_[it->second];
}

void ConstantsTable::set_magnitude(const std::string& name, double magnitude) {
    const auto it = index_.find(name);
    if (it == index_.end()) throw Error("missing required key " + name);
    ConstantEntry& e = entries_[it->second];
    e.value = Quantity(magnitude, e.value.dim());
}

ConstantsTable ConstantsTable::parse(std::string_view text) {
    ConstantsTable table;
    table.fingerprint_ = content_hash(text);

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos) line_error(line_no, "missing '='");
        ConstantEntry entry;
        entry.name = trim(stripped.substr(0, eq));
        if (entry.name.empty()) line_error(line_no, "missing name");

        std::string rest = stripped.substr(eq + 1);
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto semi = rest.find(';', start);
            fields.push_back(trim(rest.substr(start, semi - start)));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (fields.size() != 3) line_error(line_no, "expected value ; provenance ; note");

        // value and unit expression
        std::size_t used = 0;
        double magnitude = 0.0;
        try {
            magnitude = std::stod(fields[0], &used);
        } catch (const std::exception&) {
            line_error(line_no, "malformed magnitude");
        }
        Dimension dim = parse_unit_expr(fields[0].substr(used), line_no);
        try {
            entry.value = Quantity(magnitude, dim);
        } catch (const Error& err) {
            line_error(line_no, err.what());
        }

        if (fields[1].rfind("provenance=", 0) != 0)
            line_error(line_no, "expected provenance=<measured|paper|derived>");
        entry.provenance = parse_provenance(fields[1].substr(11), line_no);

        if (fields[2].rfind("note=\"", 0) != 0 || fields[2].back() != '"')
            line_error(line_no, "expected note=\"...\"");
        entry.note = fields[2].substr(6, fields[2].size() - 7);

        table.add(std::move(entry));
    }

    for (const auto& key : required_keys())
        if (!table.contains(key)) throw Error("missing required key " + key);

    // Recompute derived entries from their dependencies; rules are applied
    // in declaration order so chained derivations see updated values.
    for (const auto& [name, expr_text] : derivation_rules()) {
        const auto it = table.index_.find(name);
        if (it == table.index_.end()) continue;
        ConstantEntry& entry = table.entries_[it->second];
        if (entry.provenance != Provenance::derived) continue;
        const ExprPtr expr = parse_expression(expr_text);
        const Quantity recomputed = eval_expression(expr, table);
        if (recomputed.dim() != entry.value.dim())
            throw Error("inconsistent constants file: " + name + " has dimension " +
                        entry.value.dim().str() + ", expected " + recomputed.dim().str());
        if (decade_gap(recomputed, entry.value) > 0.5)
            throw Error("inconsistent constants file: " + name + " stated as " +
                        format_magnitude(entry.value.magnitude()) + ", recomputed " +
                        format_magnitude(recomputed.magnitude()));
        entry.value = recomputed;
        entry.derived_from = expression_references(expr);
    }
    for (const auto& entry : table.entries_)
        if (entry.provenance == Provenance::derived && entry.derived_from.empty())
            throw Error("no derivation rule for derived key " + entry.name);

    return table;
}

ConstantsTable ConstantsTable::builtin() {
    return parse(kDefaultConstantsText);
}

std::string ConstantsTable::serialize() const {
    std::string out;
    for (const auto& e : entries_) {
        out += e.name + " = " + format_magnitude(e.value.magnitude()) + " " +
               e.value.dim().str() + " ; provenance=" + provenance_name(e.provenance) +
               " ; note=\"" + e.note + "\"\n";
    }
    return out;
}

} // namespace cledger
