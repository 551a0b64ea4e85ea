#include "monores/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace monores {

namespace {

struct RawMonomial {
    std::vector<std::pair<std::size_t, std::uint64_t>> factors;  // (variable index, exponent)
    bool unit = false;
    std::size_t line = 0;
    std::size_t column = 0;
};

class TextParser {
public:
    explicit TextParser(std::string_view text) : text_(text) {}

    ParsedIdeal run()
    {
        std::size_t declared = 0;
        bool have_header = false;
        bool seen_monomial = false;
        std::vector<RawMonomial> raws;

        std::size_t start = 0;
        while (start <= text_.size()) {
            std::size_t end = text_.find('\n', start);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(start, end - start);
            start = end + 1;
            ++line_no_;

            std::string_view body = line.substr(0, line.find('#'));
            if (is_blank(body))
                continue;
            std::size_t first = body.find_first_not_of(" \t\r");
            if (body.substr(first).starts_with("vars")) {
                if (have_header || seen_monomial)
                    throw ParseError("'vars:' header must come first and only once", line_no_, first + 1);
                declared = parse_header(body, first);
                have_header = true;
            } else {
                parse_monomial_line(body, raws);
                seen_monomial = true;
            }
        }

        std::size_t n = declared;
        for (const auto& raw : raws) {
            for (const auto& [var, exp] : raw.factors) {
                if (have_header && var > declared)
                    throw ParseError("variable x" + std::to_string(var) + " exceeds declared count " +
                                         std::to_string(declared),
                                     raw.line, raw.column);
                n = std::max(n, var);
            }
        }

        std::vector<Multidegree> gens;
        for (const auto& raw : raws) {
            Multidegree m(n);
            for (const auto& [var, exp] : raw.factors) {
                std::uint64_t total = std::uint64_t{m[var - 1]} + exp;
                if (total > kMaxExponent)
                    throw ParseError("exponent exceeds supported maximum", raw.line, raw.column);
                m[var - 1] = static_cast<Exponent>(total);
            }
            if (m.is_one())
                throw ParseError("the unit monomial generates the whole ring", raw.line, raw.column);
            gens.push_back(std::move(m));
        }

        ParsedIdeal out{minimalize(std::span<const Multidegree>(gens), n), 0, {}};
        out.dropped = gens.size() - out.ideal.size();
        if (out.dropped > 0)
            out.warnings.push_back(std::to_string(out.dropped) +
                                   " generator(s) dropped as duplicates or non-minimal");
        return out;
    }

private:
    static bool is_blank(std::string_view s)
    {
        return s.find_first_not_of(" \t\r") == std::string_view::npos;
    }

    std::uint64_t parse_number(std::string_view s, std::size_t& i)
    {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number", line_no_, i + 1);
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > kMaxExponent)
                throw ParseError("number too large", line_no_, i + 1);
            ++i;
        }
        return v;
    }

    static void skip_spaces(std::string_view s, std::size_t& i)
    {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
    }

    std::size_t parse_header(std::string_view s, std::size_t i)
    {
        i += 4;
        skip_spaces(s, i);
        if (i >= s.size() || s[i] != ':')
            throw ParseError("expected ':' after 'vars'", line_no_, i + 1);
        ++i;
        skip_spaces(s, i);
        std::uint64_t n = parse_number(s, i);
        skip_spaces(s, i);
        if (i != s.size())
            throw ParseError("unexpected text after variable count", line_no_, i + 1);
        if (n == 0)
            throw ParseError("variable count must be positive", line_no_, i);
        return static_cast<std::size_t>(n);
    }

    void parse_monomial_line(std::string_view s, std::vector<RawMonomial>& out)
    {
        std::size_t i = 0;
        while (true) {
            skip_spaces(s, i);
            RawMonomial raw;
            raw.line = line_no_;
            raw.column = i + 1;
            bool any = false;
            while (i < s.size() && s[i] != ',') {
                if (s[i] == 'x' || s[i] == 'X') {
                    ++i;
                    std::size_t var = static_cast<std::size_t>(parse_number(s, i));
                    if (var == 0)
                        throw ParseError("variables are numbered from 1", line_no_, i);
                    std::uint64_t exp = 1;
                    skip_spaces(s, i);
                    if (i < s.size() && s[i] == '^') {
                        ++i;
                        skip_spaces(s, i);
                        exp = parse_number(s, i);
                    }
                    raw.factors.emplace_back(var, exp);
                    any = true;
                } else if (s[i] == '1' && !any && (i + 1 == s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
                    ++i;
                    raw.unit = true;
                    any = true;
                } else {
                    throw ParseError(std::string("unexpected character '") + s[i] + "'", line_no_, i + 1);
                }
                skip_spaces(s, i);
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip_spaces(s, i);
                    if (i >= s.size() || s[i] == ',')
                        throw ParseError("dangling '*'", line_no_, i + 1);
                }
            }
            if (!any)
                throw ParseError("empty monomial", line_no_, i + 1);
            out.push_back(std::move(raw));
            if (i >= s.size())
                return;
            ++i;  // consume ','
        }
    }

    std::string_view text_;
    std::size_t line_no_ = 0;
};

}  // namespace

ParsedIdeal parse_ideal_text(std::string_view text)
{
    return TextParser(text).run();
}

ParsedIdeal parse_ideal_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; convert it to line and column
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON", line, col);
    }
    if (!doc.is_object() || !doc.contains("variables") || !doc.contains("generators"))
        throw ParseError("expected object with 'variables' and 'generators'", 1, 1);
    const auto& vars = doc["variables"];
    if (!vars.is_number_unsigned() || vars.get<std::uint64_t>() == 0)
        throw ParseError("'variables' must be a positive integer", 1, 1);
    const std::size_t n = vars.get<std::size_t>();
    const auto& gens_json = doc["generators"];
    if (!gens_json.is_array())
        throw ParseError("'generators' must be an array", 1, 1);

    std::vector<Multidegree> gens;
    for (std::size_t g = 0; g < gens_json.size(); ++g) {
        const auto& row = gens_json[g];
        if (!row.is_array() || row.size() != n)
            throw ParseError("generator " + std::to_string(g) + " must be an array of " + std::to_string(n) +
                                 " exponents (inconsistent variable count)",
                             1, 1);
        Multidegree m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!row[i].is_number_unsigned() || row[i].get<std::uint64_t>() > kMaxExponent)
                throw ParseError("generator " + std::to_string(g) + " has an invalid exponent", 1, 1);
            m[i] = row[i].get<Exponent>();
        }
        if (m.is_one())
            throw ParseError("generator " + std::to_string(g) + " is the unit monomial", 1, 1);
        gens.push_back(std::move(m));
    }
    ParsedIdeal out{minimalize(std::span<const Multidegree>(gens), n), 0, {}};
    out.dropped = gens.size() - out.ideal.size();
    if (out.dropped > 0)
        out.warnings.push_back(std::to_string(out.dropped) + " generator(s) dropped as duplicates or non-minimal");
    return out;
}

ParsedIdeal parse_ideal(std::string_view text)
{
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_ideal_json(text);
    return parse_ideal_text(text);
}

ParsedIdeal read_ideal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal(buf.str());
}

std::string format_ideal_text(const MonomialIdeal& ideal)
{
    std::ostringstream os;
    os << "vars: " << ideal.num_vars() << '\n';
    for (const auto& g : ideal.generators())
        os << format_monomial(g) << '\n';
    return os.str();
}

nlohmann::json to_json(const Multidegree& m)
{
    return nlohmann::json(m.vec());
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.generators())
        gens.push_back(to_json(g));
    return {{"variables", ideal.num_vars()}, {"generators", gens}};
}

std::string format_ideal_json(const MonomialIdeal& ideal)
{
    return ideal_to_json(ideal).dump() + "\n";
}

}  // namespace monores
