#include "wittkit/gamma.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <atomic>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wittkit/errors.hpp"

namespace wittkit {

GroupElement GroupElement::operator+(const GroupElement& o) const {
    assert(n.size() == o.n.size());
    GroupElement r = *this;
    for (size_t k = 0; k < n.size(); ++k) r.n[k] += o.n[k];
    return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
    assert(n.size() == o.n.size());
    GroupElement r = *this;
    for (size_t k = 0; k < n.size(); ++k) r.n[k] -= o.n[k];
    return r;
}

GroupElement GroupElement::operator-() const {
    GroupElement r = *this;
    for (auto& v : r.n) v = -v;
    return r;
}

GroupElement GroupElement::operator*(int k) const {
    GroupElement r = *this;
    for (auto& v : r.n) v *= k;
    return r;
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < n.size(); ++k) {
        if (k) os << ",";
        os << n[k];
    }
    os << ")";
    return os.str();
}

GammaConfig::GammaConfig(int rank, std::vector<std::string> generator_names)
    : rank_(rank), generator_names_(std::move(generator_names)) {
    order_priority_.resize(rank_);
    for (int k = 0; k < rank_; ++k) order_priority_[k] = k;
    order_signs_.assign(rank_, 1);
    validate();
    invalidate_cache();
}

Scalar GammaConfig::small_int(long v) const {
    // Thread-local constants per rank, shared only within one thread.
    static thread_local std::map<int, std::vector<Scalar>> table;
    auto& slot = table[rank_];
    if (slot.empty()) {
        slot.reserve(33);
        for (long k = -16; k <= 16; ++k) slot.push_back(Scalar(rank_, Rational(k)));
    }
    return slot[v + 16];
}

namespace {
std::atomic<unsigned long> next_cache_id{1};
}

void GammaConfig::invalidate_cache() { cache_id_ = next_cache_id.fetch_add(1); }

void GammaConfig::validate() const {
    if (rank_ <= 0) throw InvalidConfig("rank must be positive");
    if ((int)generator_names_.size() != rank_)
        throw InvalidConfig("generator name count must equal rank");
    std::set<std::string> seen(generator_names_.begin(), generator_names_.end());
    if ((int)seen.size() != rank_) throw InvalidConfig("generator names must be distinct");
    for (const auto& name : generator_names_) {
        if (name.empty() || !isalpha((unsigned char)name[0]))
            throw InvalidConfig("generator names must start with a letter: " + name);
        if (name == "L" || name == "C")
            throw InvalidConfig("generator name collides with the basis syntax: " + name);
    }
}

void GammaConfig::set_specialization(std::vector<Rational> values) {
    if ((int)values.size() != rank_)
        throw InvalidConfig("specialization must cover every generator");
    for (const auto& v : values)
        if (v == 0) throw InvalidConfig("specialization values must be nonzero");
    auto saved = std::move(specialization_);
    specialization_ = std::move(values);
    invalidate_cache();
    try {
        check_injectivity(6);
        if (unit_ && !embed(*unit_).is_one())
            throw InvalidConfig("designated unit does not evaluate to 1");
    } catch (...) {
        specialization_ = std::move(saved);
        invalidate_cache();
        throw;
    }
}

void GammaConfig::set_unit(GroupElement u) {
    if ((int)u.rank() != rank_) throw InvalidConfig("unit has wrong rank");
    if (!embed(u).is_one())
        throw InvalidConfig("designated unit does not evaluate to 1");
    unit_ = std::move(u);
}

void GammaConfig::set_order(std::vector<int> priority, std::vector<int> signs) {
    if ((int)priority.size() != rank_ || (int)signs.size() != rank_)
        throw InvalidConfig("order priority and signs must cover every generator");
    std::vector<bool> used(rank_, false);
    for (int p : priority) {
        if (p < 0 || p >= rank_ || used[p]) throw InvalidConfig("order priority must be a permutation");
        used[p] = true;
    }
    for (int s : signs)
        if (s != 1 && s != -1) throw InvalidConfig("order signs must be +1 or -1");
    order_priority_ = std::move(priority);
    order_signs_ = std::move(signs);
}

Scalar GammaConfig::embed(const GroupElement& alpha) const {
    assert((int)alpha.rank() == rank_);
    static thread_local std::map<std::pair<unsigned long, GroupElement>, Scalar> tl_cache;
    auto key = std::make_pair(cache_id_, alpha);
    auto it = tl_cache.find(key);
    if (it != tl_cache.end()) return it->second;
    Scalar result = zero();
    if (specialization_) {
        Rational v(0);
        for (int k = 0; k < rank_; ++k) v += Rational(alpha.n[k]) * (*specialization_)[k];
        result = scalar(v);
    } else {
        // Unit monomials in ascending generator order are already
        // descending under lex: the canonical term list builds directly.
        std::vector<Poly::Term> terms;
        terms.reserve(rank_);
        for (int k = 0; k < rank_; ++k) {
            if (alpha.n[k] == 0) continue;
            Monomial m(rank_, 0);
            m[k] = 1;
            terms.push_back({std::move(m), Rational(alpha.n[k])});
        }
        result = Scalar(Poly::from_presorted(rank_, std::move(terms)));
    }
    tl_cache.emplace(std::move(key), result);
    return result;
}

GroupElement GammaConfig::unit_vector(int k) const {
    GroupElement e = zero_degree();
    e.n[k] = 1;
    return e;
}

int GammaConfig::compare(const GroupElement& a, const GroupElement& b) const {
    for (int slot = 0; slot < rank_; ++slot) {
        int k = order_priority_[slot];
        int d = order_signs_[slot] * (a.n[k] - b.n[k]);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

void GammaConfig::check_injectivity(int bound) const {
    if (!specialization_) return;  // independent symbols always separate
    // embed is linear, so injectivity on the box is equivalent to
    // embed(delta) != 0 for every nonzero delta in the doubled box.
    std::vector<int> delta(rank_, -2 * bound);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rank_) {
            GroupElement d{delta};
            if (!d.is_zero() && embed(d).is_zero())
                throw InvalidConfig("specialization is not injective on the window: embed" +
                                    d.to_string() + " = 0");
            return;
        }
        for (delta[pos] = -2 * bound; delta[pos] <= 2 * bound; ++delta[pos]) rec(pos + 1);
    };
    if (rank_ <= 3) rec(0);  // box enumeration is exponential in rank
}

GammaConfig GammaConfig::integers() {
    GammaConfig g(1, {"g1"});
    g.set_specialization({Rational(1)});
    g.set_unit(GroupElement{{1}});
    return g;
}

GammaConfig GammaConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidConfig(std::string("bad gamma JSON: ") + e.what());
    }
    try {
        int rank = j.at("rank").get<int>();
        std::vector<std::string> names = j.at("generators").get<std::vector<std::string>>();
        GammaConfig g(rank, names);
        if (j.contains("order")) {
            auto pr = j["order"].at("priority").get<std::vector<int>>();
            for (auto& p : pr) p -= 1;  // JSON is 1-based
            g.set_order(pr, j["order"].at("signs").get<std::vector<int>>());
        }
        if (j.contains("specialization")) {
            std::vector<Rational> vals(rank, Rational(0));
            for (auto& [key, val] : j["specialization"].items()) {
                auto it = std::find(names.begin(), names.end(), key);
                if (it == names.end()) throw UnknownGenerator(key);
                vals[it - names.begin()] = rat_from_string(val.get<std::string>());
            }
            g.set_specialization(vals);
        }
        if (j.contains("unit")) g.set_unit(GroupElement{j["unit"].get<std::vector<int>>()});
        return g;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidConfig(std::string("bad gamma JSON: ") + e.what());
    }
}

std::string GammaConfig::to_json_text() const {
    nlohmann::json j;
    j["rank"] = rank_;
    j["generators"] = generator_names_;
    if (specialization_) {
        nlohmann::json s;
        for (int k = 0; k < rank_; ++k)
            s[generator_names_[k]] = rat_to_string((*specialization_)[k]);
        j["specialization"] = s;
    }
    if (unit_) j["unit"] = unit_->n;
    std::vector<int> pr = order_priority_;
    for (auto& p : pr) p += 1;
    j["order"] = {{"priority", pr}, {"signs", order_signs_}};
    return j.dump();
}

std::string GammaConfig::fingerprint() const {
    // FNV-1a over the canonical JSON form.
    std::string s = to_json_text();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

long long int_matrix_det(const std::vector<std::vector<int>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<int>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<int> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        long long term = (long long)m[0][j] * int_matrix_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

ScaleMap::ScaleMap(Scalar value, std::vector<std::vector<int>> matrix, bool)
    : value_(std::move(value)), matrix_(std::move(matrix)) {}

ScaleMap::ScaleMap(const GammaConfig& config, Scalar value,
                   std::vector<std::vector<int>> matrix)
    : value_(std::move(value)), matrix_(std::move(matrix)) {
    int r = config.rank();
    if ((int)matrix_.size() != r) throw InvalidScaleMap("matrix must be rank x rank");
    for (const auto& row : matrix_)
        if ((int)row.size() != r) throw InvalidScaleMap("matrix must be rank x rank");
    if (value_.is_zero()) throw InvalidScaleMap("scale value must be nonzero");
    long long det = int_matrix_det(matrix_);
    if (det != 1 && det != -1) throw InvalidScaleMap("matrix must be unimodular");
    for (int k = 0; k < r; ++k) {
        GroupElement ek = config.unit_vector(k);
        if (value_ * config.embed(ek) != config.embed(apply(ek)))
            throw InvalidScaleMap("scale value is inconsistent with the matrix on generator " +
                                  config.generator_names()[k]);
    }
}

ScaleMap ScaleMap::identity(const GammaConfig& config) {
    int r = config.rank();
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
    for (int k = 0; k < r; ++k) m[k][k] = 1;
    return ScaleMap(config.one(), std::move(m), true);
}

GroupElement ScaleMap::apply(const GroupElement& alpha) const {
    int r = (int)matrix_.size();
    GroupElement out{std::vector<int>(r, 0)};
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) out.n[i] += matrix_[i][k] * alpha.n[k];
    return out;
}

ScaleMap ScaleMap::compose(const ScaleMap& o) const {
    int r = (int)matrix_.size();
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) m[i][j] += matrix_[i][k] * o.matrix_[k][j];
    Scalar v = value_ * o.value_;
    return ScaleMap(std::move(v), std::move(m), true);
}

ScaleMap ScaleMap::inverse() const {
    int r = (int)matrix_.size();
    long long det = int_matrix_det(matrix_);
    std::vector<std::vector<int>> inv(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            std::vector<std::vector<int>> minor;
            for (int rr = 0; rr < r; ++rr) {
                if (rr == j) continue;
                std::vector<int> row;
                for (int cc = 0; cc < r; ++cc)
                    if (cc != i) row.push_back(matrix_[rr][cc]);
                minor.push_back(std::move(row));
            }
            long long cof = int_matrix_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = (int)(cof * det);  // det is +-1
        }
    }
    return ScaleMap(value_.inverse(), std::move(inv), true);
}

GroupElement scale_apply(const ScaleMap& m, const GroupElement& alpha) {
    return m.apply(alpha);
}

bool Window::contains_degree(const GroupElement& alpha) const {
    for (int v : alpha.n)
        if (v < -degree_bound || v > degree_bound) return false;
    return true;
}

std::vector<GroupElement> Window::degrees(const GammaConfig& config) const {
    std::vector<GroupElement> out;
    int r = config.rank();
    std::vector<int> coords(r, -degree_bound);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r) {
            out.push_back(GroupElement{coords});
            return;
        }
        for (coords[pos] = -degree_bound; coords[pos] <= degree_bound; ++coords[pos]) rec(pos + 1);
    };
    rec(0);
    std::sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) {
        return config.compare(a, b) < 0;
    });
    return out;
}

}  // namespace wittkit
