#include "tensoratoms/tableau.hpp"

#include <limits>

namespace ta {

Word::Word(std::vector<int> letters, int alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw validation_error("alphabet size must be >= 1");
    for (const int x : letters_) {
        if (x < 1 || x > alphabet_)
            throw validation_error("letter " + std::to_string(x) + " outside alphabet {1.." +
                                   std::to_string(alphabet_) + "}");
    }
}

Tableau::Tableau(std::vector<std::vector<int>> rows, int alphabet)
    : rows_(std::move(rows)), alphabet_(alphabet) {
    if (alphabet_ < 1) throw validation_error("alphabet size must be >= 1");
    if (static_cast<int>(rows_.size()) > alphabet_)
        throw validation_error("tableau has more rows than letters");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw validation_error("tableau rows must be non-empty");
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw validation_error("tableau row lengths must weakly decrease");
        for (std::size_t j = 0; j < row.size(); ++j) {
            const int x = row[j];
            if (x < 1 || x > alphabet_) throw validation_error("tableau entry outside alphabet");
            if (j > 0 && row[j - 1] > x)
                throw validation_error("tableau rows must weakly increase");
            if (i > 0 && rows_[i - 1][j] >= x)
                throw validation_error("tableau columns must strictly increase");
        }
    }
}

std::size_t Tableau::box_count() const {
    std::size_t total = 0;
    for (const auto& row : rows_) total += row.size();
    return total;
}

YoungDiagram Tableau::shape() const {
    std::vector<Int> parts;
    parts.reserve(alphabet_);
    for (const auto& row : rows_) parts.emplace_back(static_cast<unsigned long>(row.size()));
    while (static_cast<int>(parts.size()) < alphabet_) parts.emplace_back(0);
    return YoungDiagram(Weight(std::move(parts)));
}

GTPattern pattern_from_tableau(const Tableau& t) {
    const int n = t.alphabet();
    std::vector<std::vector<Int>> rows(n);
    for (int l = n; l >= 1; --l) {
        std::vector<Int>& level = rows[n - l];
        level.assign(l, Int(0));
        for (int i = 0; i < l && i < static_cast<int>(t.rows().size()); ++i) {
            unsigned long count = 0;
            for (const int x : t.rows()[i]) {
                if (x <= l) ++count;
            }
            level[i] = count;
        }
    }
    return GTPattern(std::move(rows));
}

namespace {

std::size_t to_size(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p())
        throw validation_error(std::string("pattern entry too large to realize a ") + what);
    return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

Tableau tableau_from_pattern(const GTPattern& a) {
    if (!a.shape().is_young_diagram())
        throw validation_error("pattern shape has negative parts; no tableau exists");
    const int n = a.rank();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        Int prev = 0;
        for (int l = i; l <= n; ++l) {
            const Int& al_i = a.level(l)[i - 1];
            const Int copies = al_i - prev;
            row.insert(row.end(), to_size(copies, "tableau row"), l);
            prev = al_i;
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows), n);
}

std::vector<Tableau> enumerate_tableaux(const YoungDiagram& shape, const Int& cap) {
    std::vector<Tableau> out;
    for_each_pattern(shape.weight(), [&](const std::vector<std::vector<Int>>& rows) {
        out.push_back(tableau_from_pattern(GTPattern(rows)));
        if (Int(static_cast<unsigned long>(out.size())) > cap)
            throw cap_exceeded("tableau enumeration cap exceeded for shape " +
                               shape.weight().to_string());
    });
    return out;
}

}  // namespace ta
