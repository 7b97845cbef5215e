#include "qdk/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qdk::tableaux {

namespace {

void strip_full_columns(std::vector<int>& rows, int d) {
    // remove trailing zeros first so rows.size() counts occupied rows
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (static_cast<int>(rows.size()) == d && d > 0) {
        int full = rows.back();   // every column of height d
        if (full > 0) {
            for (auto& r : rows) r -= full;
        }
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
    }
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows, int d) : rows_(std::move(rows)), d_(d) {
    if (d_ < 2) throw std::invalid_argument("YoungDiagram: group rank d must be >= 2");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("YoungDiagram: negative row length");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
    }
    if (static_cast<int>(rows_.size()) > d_) {
        // trailing zero rows are fine; actual box rows beyond d are not
        std::vector<int> tmp = rows_;
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        if (static_cast<int>(tmp.size()) > d_)
            throw std::invalid_argument("YoungDiagram: more than d rows");
    }
    strip_full_columns(rows_, d_);
}

YoungDiagram YoungDiagram::singlet(int d) { return YoungDiagram({}, d); }

YoungDiagram YoungDiagram::fundamental(int d) { return YoungDiagram({1}, d); }

YoungDiagram YoungDiagram::antifundamental(int d) {
    return YoungDiagram(std::vector<int>(d - 1, 1), d);
}

YoungDiagram YoungDiagram::from_dynkin(const DynkinLabel& labels, int d) {
    if (static_cast<int>(labels.size()) != d - 1)
        throw std::invalid_argument("from_dynkin: need d-1 labels");
    std::vector<int> rows(d - 1, 0);
    int acc = 0;
    for (int i = d - 2; i >= 0; --i) {
        if (labels[i] < 0) throw std::invalid_argument("from_dynkin: negative label");
        acc += labels[i];
        rows[i] = acc;
    }
    return YoungDiagram(rows, d);
}

int YoungDiagram::box_count() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

DynkinLabel YoungDiagram::dynkin() const {
    DynkinLabel labels(d_ - 1, 0);
    for (int i = 0; i < d_ - 1; ++i) {
        int ri = i < static_cast<int>(rows_.size()) ? rows_[i] : 0;
        int rn = i + 1 < static_cast<int>(rows_.size()) ? rows_[i + 1] : 0;
        labels[i] = ri - rn;
    }
    return labels;
}

bool YoungDiagram::operator<(const YoungDiagram& other) const {
    auto da = dimension_closed_form(*this);
    auto db = dimension_closed_form(other);
    if (da != db) return da > db;
    return dynkin() < other.dynkin();
}

std::string YoungDiagram::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ',';
        out << rows_[i];
    }
    out << ']';
    return out.str();
}

std::int64_t dimension_closed_form(const YoungDiagram& diagram) {
    // Weyl product over pairs: prod_{i<j} (mu_i - mu_j + j - i) / (j - i),
    // mu padded with zeros to d entries. Exact integer arithmetic.
    const int d = diagram.group_rank();
    std::vector<int> mu(d, 0);
    for (std::size_t i = 0; i < diagram.rows().size(); ++i) mu[i] = diagram.rows()[i];

    __int128 num = 1, den = 1;
    const __int128 limit = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            num *= mu[i] - mu[j] + j - i;
            den *= j - i;
            if (num % den == 0) {   // keep intermediates small
                num /= den;
                den = 1;
            }
            if (num / den > limit)
                throw std::overflow_error("dimension_closed_form: result exceeds int64");
        }
    }
    if (num % den != 0) throw std::logic_error("dimension_closed_form: non-integer product");
    return static_cast<std::int64_t>(num / den);
}

std::int64_t count_semistandard_fillings(const YoungDiagram& diagram) {
    const int d = diagram.group_rank();
    const auto& rows = diagram.rows();
    if (rows.empty()) return 1;

    // enumerate row by row, cell by cell; entry must be >= left neighbor
    // and > the entry directly above
    std::vector<std::vector<int>> fill(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) fill[r].assign(rows[r], 0);

    std::int64_t count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int c) {
        if (r == rows.size()) {
            ++count;
            return;
        }
        std::size_t nr = r;
        int nc = c + 1;
        if (nc >= rows[r]) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < rows[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= d; ++v) {
            fill[r][c] = v;
            rec(nr, nc);
        }
        fill[r][c] = 0;
    };
    rec(0, 0);
    return count;
}

std::int64_t dimension(const YoungDiagram& diagram) {
    constexpr int kEnumerationBoxLimit = 8;
    if (diagram.box_count() <= kEnumerationBoxLimit && diagram.group_rank() <= 4)
        return count_semistandard_fillings(diagram);
    return dimension_closed_form(diagram);
}

YoungDiagram conjugate_irrep(const YoungDiagram& diagram) {
    const int d = diagram.group_rank();
    if (diagram.is_singlet()) return diagram;
    const int width = diagram.rows().front();
    std::vector<int> rows(d, width);
    for (std::size_t i = 0; i < diagram.rows().size(); ++i)
        rows[d - 1 - i] = width - diagram.rows()[i];
    return YoungDiagram(rows, d);
}

void Decomposition::add(const YoungDiagram& diagram, std::int64_t multiplicity) {
    if (multiplicity <= 0) throw std::invalid_argument("Decomposition::add: multiplicity must be positive");
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.diagram == diagram; });
    if (it != terms_.end()) {
        it->multiplicity += multiplicity;
        return;
    }
    Term term{diagram, multiplicity};
    auto pos = std::lower_bound(terms_.begin(), terms_.end(), term,
                                [](const Term& a, const Term& b) { return a.diagram < b.diagram; });
    terms_.insert(pos, std::move(term));
}

std::int64_t Decomposition::total_dimension() const {
    std::int64_t total = 0;
    for (const auto& t : terms_) total += t.multiplicity * dimension_closed_form(t.diagram);
    return total;
}

std::int64_t Decomposition::multiplicity_of(const YoungDiagram& diagram) const {
    for (const auto& t : terms_)
        if (t.diagram == diagram) return t.multiplicity;
    return 0;
}

std::string Decomposition::direct_sum_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        auto dim = dimension_closed_form(t.diagram);
        for (std::int64_t m = 0; m < t.multiplicity; ++m) {
            if (!first) out << " + ";
            out << dim;
            first = false;
        }
    }
    if (first) out << "0";
    return out.str();
}

Decomposition tensor_pieri(const YoungDiagram& diagram, const PieriShape& shape) {
    const int d = diagram.group_rank();
    const int k = shape.boxes;
    if (k < 1) throw std::invalid_argument("tensor_pieri: k must be >= 1");
    if (shape.kind == PieriShape::Kind::Column && k > d)
        throw std::invalid_argument("tensor_pieri: column factor taller than d");

    std::vector<int> base(d, 0);
    for (std::size_t i = 0; i < diagram.rows().size(); ++i) base[i] = diagram.rows()[i];

    Decomposition out;
    // distribute k boxes over rows 0..d-1 with additions a_i
    std::vector<int> add(d, 0);
    std::function<void(int, int)> rec = [&](int row, int left) {
        if (row == d) {
            if (left != 0) return;
            std::vector<int> rows(d);
            for (int i = 0; i < d; ++i) rows[i] = base[i] + add[i];
            // validity: weakly decreasing
            for (int i = 1; i < d; ++i)
                if (rows[i] > rows[i - 1]) return;
            if (shape.kind == PieriShape::Kind::Row) {
                // no two added boxes in the same column: row i additions must
                // not extend past the previous row's ORIGINAL length
                for (int i = 1; i < d; ++i)
                    if (add[i] > 0 && rows[i] > base[i - 1]) return;
            } else {
                // no two added boxes in the same row
                for (int i = 0; i < d; ++i)
                    if (add[i] > 1) return;
            }
            out.add(YoungDiagram(rows, d));
            return;
        }
        int maxhere = shape.kind == PieriShape::Kind::Column ? std::min(left, 1) : left;
        for (int a = 0; a <= maxhere; ++a) {
            add[row] = a;
            rec(row + 1, left - a);
        }
        add[row] = 0;
    };
    rec(0, k);
    return out;
}

Decomposition decompose_chain(const std::vector<FactorKind>& factors, int d) {
    if (factors.empty()) throw std::invalid_argument("decompose_chain: empty factor list");
    auto factor_diagram = [d](FactorKind kind) {
        return kind == FactorKind::Fundamental ? YoungDiagram::fundamental(d)
                                               : YoungDiagram::antifundamental(d);
    };
    auto factor_shape = [d](FactorKind kind) {
        return kind == FactorKind::Fundamental ? PieriShape::row(1) : PieriShape::column(d - 1);
    };

    Decomposition current;
    current.add(factor_diagram(factors.front()));
    for (std::size_t f = 1; f < factors.size(); ++f) {
        Decomposition next;
        for (const auto& term : current.terms()) {
            Decomposition product = tensor_pieri(term.diagram, factor_shape(factors[f]));
            for (const auto& p : product.terms()) next.add(p.diagram, p.multiplicity * term.multiplicity);
        }
        current = std::move(next);
    }
    return current;
}

std::string to_json(const Decomposition& decomposition, int d,
                    const std::vector<FactorKind>& factors) {
    nlohmann::json j;
    j["schema"] = "qdk-decomposition/1";
    j["d"] = d;
    auto& jf = j["factors"] = nlohmann::json::array();
    for (auto k : factors) jf.push_back(k == FactorKind::Fundamental ? "f" : "af");
    auto& jt = j["terms"] = nlohmann::json::array();
    for (const auto& t : decomposition.terms()) {
        nlohmann::json term;
        term["dynkin"] = t.diagram.dynkin();
        term["dim"] = dimension_closed_form(t.diagram);
        term["mult"] = t.multiplicity;
        jt.push_back(term);
    }
    return j.dump(2);
}

Decomposition decomposition_from_json(const std::string& json_text, int* d_out,
                                      std::vector<FactorKind>* factors_out) {
    auto j = nlohmann::json::parse(json_text);
    int d = j.at("d").get<int>();
    if (d_out) *d_out = d;
    if (factors_out) {
        factors_out->clear();
        for (const auto& f : j.at("factors")) {
            std::string s = f.get<std::string>();
            if (s == "f")
                factors_out->push_back(FactorKind::Fundamental);
            else if (s == "af")
                factors_out->push_back(FactorKind::Antifundamental);
            else
                throw std::invalid_argument("decomposition_from_json: bad factor " + s);
        }
    }
    Decomposition out;
    for (const auto& term : j.at("terms")) {
        auto labels = term.at("dynkin").get<DynkinLabel>();
        auto diagram = YoungDiagram::from_dynkin(labels, d);
        std::int64_t mult = term.at("mult").get<std::int64_t>();
        if (term.contains("dim") && term["dim"].get<std::int64_t>() != dimension_closed_form(diagram))
            throw std::invalid_argument("decomposition_from_json: dim inconsistent with dynkin");
        out.add(diagram, mult);
    }
    return out;
}

}  // namespace qdk::tableaux
