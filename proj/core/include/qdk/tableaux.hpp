#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdk::tableaux {

/// Dynkin labels of an SU(d) irrep: d-1 non-negative integers.
/// For d=3 this is the familiar (p,q) pair: (1,0)=3, (0,1)=3bar, (1,1)=8.
using DynkinLabel = std::vector<int>;

/// Young diagram in canonical form for SU(d): weakly decreasing row
/// lengths, fewer than d rows (columns of height d carry no SU(d) content
/// and are stripped on construction). The empty diagram is the singlet.
class YoungDiagram {
public:
    /// Builds a canonical diagram; throws std::invalid_argument if the rows
    /// are not weakly decreasing non-negative, or if more than d rows remain
    /// after stripping full columns.
    YoungDiagram(std::vector<int> rows, int d);

    static YoungDiagram singlet(int d);
    static YoungDiagram fundamental(int d);
    static YoungDiagram antifundamental(int d);         // single column of d-1 boxes
    static YoungDiagram from_dynkin(const DynkinLabel& labels, int d);

    const std::vector<int>& rows() const { return rows_; }
    int group_rank() const { return d_; }
    int box_count() const;
    bool is_singlet() const { return rows_.empty(); }

    DynkinLabel dynkin() const;                         // labels[i] = rows[i]-rows[i+1]

    bool operator==(const YoungDiagram& other) const = default;
    /// Orders by (descending dimension, then lexicographic Dynkin label);
    /// this is the term order used by Decomposition.
    bool operator<(const YoungDiagram& other) const;

    std::string to_string() const;                      // e.g. "[2,1]"

private:
    std::vector<int> rows_;   // canonical: weakly decreasing, < d entries, no trailing zeros
    int d_;
};

/// Number of semistandard fillings with entries 1..d, via the Weyl product
/// formula. Exact integer arithmetic; throws std::overflow_error if the
/// dimension exceeds int64.
std::int64_t dimension_closed_form(const YoungDiagram& diagram);

/// Counts semistandard fillings (rows nondecreasing, columns strictly
/// increasing) by direct enumeration. Intended for small diagrams; the
/// closed form must agree and tests hold this as the authority.
std::int64_t count_semistandard_fillings(const YoungDiagram& diagram);

/// Irrep dimension: filling enumeration below a small box-count threshold,
/// closed form above it.
std::int64_t dimension(const YoungDiagram& diagram);

/// Complement of the diagram in the d x rows[0] rectangle, rotated 180
/// degrees. Involution; for d=3 maps (p,q) -> (q,p).
YoungDiagram conjugate_irrep(const YoungDiagram& diagram);

/// One Pieri factor: a single row or single column of k boxes.
struct PieriShape {
    enum class Kind { Row, Column };
    Kind kind;
    int boxes;

    static PieriShape row(int k) { return {Kind::Row, k}; }
    static PieriShape column(int k) { return {Kind::Column, k}; }
};

enum class FactorKind { Fundamental, Antifundamental };

/// Multiset of irreps with multiplicities, ordered by
/// (descending dimension, lexicographic Dynkin label).
class Decomposition {
public:
    struct Term {
        YoungDiagram diagram;
        std::int64_t multiplicity;
    };

    void add(const YoungDiagram& diagram, std::int64_t multiplicity = 1);
    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t total_dimension() const;               // sum of mult * dim
    std::int64_t multiplicity_of(const YoungDiagram& diagram) const;

    /// Human-readable direct sum with every copy spelled out, e.g.
    /// "8 + 8 + 1 + 10" (largest dimension first).
    std::string direct_sum_string() const;

private:
    std::vector<Term> terms_;                           // kept sorted by diagram order
};

/// Tensor product of an irrep with a single-row or single-column factor
/// (Pieri rule): row(k) adds k boxes no two in the same column, column(k)
/// adds k boxes no two in the same row. Results are canonicalized.
Decomposition tensor_pieri(const YoungDiagram& diagram, const PieriShape& shape);

/// Iterated Pieri product over fundamental / antifundamental factors.
/// fundamental = row(1); antifundamental = column(d-1).
Decomposition decompose_chain(const std::vector<FactorKind>& factors, int d);

/// JSON of the form
/// {"schema":"qdk-decomposition/1","d":3,"factors":["f","f","f"],
///  "terms":[{"dynkin":[1,1],"dim":8,"mult":2},...]}
std::string to_json(const Decomposition& decomposition, int d,
                    const std::vector<FactorKind>& factors);
Decomposition decomposition_from_json(const std::string& json_text, int* d_out = nullptr,
                                      std::vector<FactorKind>* factors_out = nullptr);

}  // namespace qdk::tableaux
