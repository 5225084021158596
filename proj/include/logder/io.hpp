#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derivations.hpp"

namespace logder {

namespace detail {

/// Drops a trailing '#' comment, then reports whether anything is left.
inline bool strip_to_blank(std::string& line) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(std::move(tok));
    return out;
}

inline long parse_header_value(const std::vector<std::string>& toks, const std::string& keyword,
                               int line_no) {
    if (toks.size() != 2 || toks[0] != keyword)
        throw parse_error("expected '" + keyword + " <value>'", line_no);
    try {
        size_t used = 0;
        long v = std::stol(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument(toks[1]);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad integer '" + toks[1] + "'", line_no);
    }
}

/// Recursive-descent parser for polynomial expressions in x1..xn and the
/// field generator z. Grammar: sums of products of signed powered atoms;
/// multiplication may be written '*' or by juxtaposition (as in "2z").
class ExprParser {
public:
    ExprParser(const CycloField& f, size_t nvars, const std::string& text, int line_no)
        : field_(f), nvars_(nvars), text_(text), line_(line_no) {}

    MultiPoly parse() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                char op = text_[pos_++];
                MultiPoly rhs = parse_term();
                acc = (op == '+') ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (pos_ < text_.size() && atom_start(text_[pos_])) {
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_factor() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            return parse_factor();
        }
        MultiPoly base = parse_atom();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("missing exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly parse_atom() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            MultiPoly p = parse_expr();
            skip_ws();
            if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return p;
        }
        if (ch == 'z') {
            ++pos_;
            return MultiPoly::constant(CycloNum::zeta(field_), nvars_);
        }
        if (ch == 'x') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("missing variable index");
            unsigned long idx = std::stoul(text_.substr(start, pos_ - start));
            if (idx == 0 || idx > nvars_) fail("variable index out of range");
            return MultiPoly::variable(field_, nvars_, idx - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string num = text_.substr(start, pos_ - start);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (dstart == pos_) fail("missing denominator");
                num += "/" + text_.substr(dstart, pos_ - dstart);
            }
            return MultiPoly::constant(CycloNum(field_, parse_rational(num, line_)), nvars_);
        }
        fail(std::string("unexpected character '") + ch + "'");
        return MultiPoly();
    }

    static bool atom_start(char ch) {
        return ch == '(' || ch == 'z' || ch == 'x' || std::isdigit(static_cast<unsigned char>(ch));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("bad expression '" + text_ + "': " + why, line_);
    }

    const CycloField& field_;
    size_t nvars_;
    const std::string& text_;
    int line_;
    size_t pos_ = 0;
};

} // namespace detail

inline MultiPoly parse_polynomial(const CycloField& f, size_t nvars, const std::string& text,
                                  int line_no = 0) {
    return detail::ExprParser(f, nvars, text, line_no).parse();
}

struct ArrangementParse {
    Arrangement arrangement{};
    size_t collapsed = 0; // proportional duplicate lines merged away
};

/// Arrangement text format: `field <n>`, `dim <l>`, then one hyperplane per
/// line as l whitespace-separated scalars. '#' starts a comment.
inline ArrangementParse read_arrangement(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (detail::strip_to_blank(line)) continue;
            toks = detail::split_ws(line);
            return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    if (!next_line(toks)) throw parse_error("missing 'field' header", line_no);
    long conductor = detail::parse_header_value(toks, "field", line_no);
    if (conductor < 1) throw parse_error("field conductor must be positive", line_no);
    const CycloField& f = CycloField::get(static_cast<unsigned>(conductor));
    if (!next_line(toks)) throw parse_error("missing 'dim' header", line_no);
    long dim = detail::parse_header_value(toks, "dim", line_no);
    if (dim < 0) throw parse_error("dimension must be non-negative", line_no);

    std::vector<LinearForm> forms;
    size_t raw = 0;
    while (next_line(toks)) {
        if (toks.size() != static_cast<size_t>(dim))
            throw parse_error("expected " + std::to_string(dim) + " scalars, got " +
                                  std::to_string(toks.size()),
                              line_no);
        std::vector<CycloNum> coeffs;
        for (const std::string& t : toks) coeffs.push_back(parse_scalar(f, t, line_no));
        bool zero = true;
        for (const CycloNum& c : coeffs)
            if (!c.is_zero()) zero = false;
        if (zero) throw parse_error("zero form", line_no);
        forms.push_back(LinearForm::make(std::move(coeffs)));
        ++raw;
    }
    ArrangementParse out;
    out.arrangement = Arrangement::make(f, static_cast<size_t>(dim), std::move(forms));
    out.collapsed = raw - out.arrangement.size();
    return out;
}

inline ArrangementParse read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    return read_arrangement(in);
}

inline Arrangement parse_arrangement_file(const std::string& path) {
    return read_arrangement_file(path).arrangement;
}

inline void write_arrangement(std::ostream& out, const Arrangement& a) {
    out << "field " << a.field().conductor() << "\n";
    out << "dim " << a.dim() << "\n";
    for (const LinearForm& h : a) {
        for (size_t j = 0; j < a.dim(); ++j) {
            if (j) out << " ";
            out << h[j].str();
        }
        out << "\n";
    }
}

struct BasisParse {
    std::vector<Derivation> derivations;
    size_t dim = 0;
    unsigned conductor = 1;
};

/// Basis certificate format: header `basis l <dim> field <n>`, then one
/// derivation per line as dim comma-separated polynomial expressions.
inline BasisParse read_basis(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::string> toks;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::strip_to_blank(line)) continue;
        toks = detail::split_ws(line);
        break;
    }
    if (toks.size() != 5 || toks[0] != "basis" || toks[1] != "l" || toks[3] != "field")
        throw parse_error("expected 'basis l <dim> field <n>'", line_no);
    long dim = 0, conductor = 0;
    try {
        dim = std::stol(toks[2]);
        conductor = std::stol(toks[4]);
    } catch (const std::exception&) {
        throw parse_error("bad basis header numbers", line_no);
    }
    if (dim < 1 || conductor < 1) throw parse_error("bad basis header values", line_no);
    BasisParse out;
    out.dim = static_cast<size_t>(dim);
    out.conductor = static_cast<unsigned>(conductor);
    const CycloField& f = CycloField::get(out.conductor);

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::strip_to_blank(line)) continue;
        std::vector<std::string> pieces;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                pieces.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        pieces.push_back(cur);
        if (pieces.size() != out.dim)
            throw parse_error("expected " + std::to_string(out.dim) + " components, got " +
                                  std::to_string(pieces.size()),
                              line_no);
        ModVec v(out.dim);
        for (size_t i = 0; i < out.dim; ++i)
            v[i] = parse_polynomial(f, out.dim, pieces[i], line_no);
        out.derivations.push_back(Derivation::from_vec(std::move(v)));
    }
    return out;
}

inline BasisParse read_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    return read_basis(in);
}

inline void write_basis(std::ostream& out, const std::vector<Derivation>& basis,
                        const CycloField& f, size_t dim) {
    out << "basis l " << dim << " field " << f.conductor() << "\n";
    for (const Derivation& d : basis) {
        for (size_t i = 0; i < dim; ++i) {
            if (i) out << ", ";
            out << d.vec[i].str();
        }
        out << "\n";
    }
}

} // namespace logder
