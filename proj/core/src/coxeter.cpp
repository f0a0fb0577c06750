#include "monowalk/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include <json.hpp>

#include "monowalk/error.hpp"

namespace monowalk {

  std::string CoxeterFactor::name() const {
    switch (type) {
      case CoxeterType::A: return "A" + std::to_string(n);
      case CoxeterType::B: return "B" + std::to_string(n);
      case CoxeterType::D: return "D" + std::to_string(n);
      case CoxeterType::I2: return "I2(" + std::to_string(n) + ")";
    }
    return "?";
  }

  std::size_t CoxeterFactor::rank() const {
    return type == CoxeterType::I2 ? 2 : n;
  }

  namespace {
    CoxeterFactor make_factor(std::string const& type, long long n) {
      CoxeterFactor f;
      if (type == "A" && n >= 1) {
        f = {CoxeterType::A, static_cast<std::size_t>(n)};
      } else if (type == "B" && n >= 2) {
        f = {CoxeterType::B, static_cast<std::size_t>(n)};
      } else if (type == "D" && n >= 2) {
        f = {CoxeterType::D, static_cast<std::size_t>(n)};
      } else if (type == "I2" && n >= 2) {
        f = {CoxeterType::I2, static_cast<std::size_t>(n)};
      } else {
        raise(ErrorKind::UnsupportedType, "unsupported Coxeter factor " + type + std::to_string(n));
      }
      return f;
    }

    long long parse_count(std::string const& s, std::string const& token) {
      if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        raise(ErrorKind::UnsupportedType, "cannot parse Coxeter factor \"" + token + "\"");
      }
      return std::stoll(s);
    }

    void parse_token(std::string const& token, std::vector<CoxeterFactor>& out) {
      std::string body = token;
      long long   reps = 1;
      if (auto caret = token.find('^'); caret != std::string::npos) {
        body = token.substr(0, caret);
        reps = parse_count(token.substr(caret + 1), token);
        if (reps < 1) {
          raise(ErrorKind::UnsupportedType, "factor repeat must be positive");
        }
      }
      CoxeterFactor f;
      if (body.rfind("I2(", 0) == 0 && body.back() == ')') {
        f = make_factor("I2", parse_count(body.substr(3, body.size() - 4), token));
      } else if (!body.empty() && std::isalpha(static_cast<unsigned char>(body[0]))) {
        f = make_factor(body.substr(0, 1), parse_count(body.substr(1), token));
      } else {
        raise(ErrorKind::UnsupportedType, "cannot parse Coxeter factor \"" + token + "\"");
      }
      for (long long i = 0; i < reps; ++i) {
        out.push_back(f);
      }
    }

    struct LocalFactor {
      std::size_t                          points = 0;
      std::vector<std::vector<StateIndex>> gens;
      std::vector<std::vector<int>>        matrix;
    };

    std::vector<StateIndex> identity_perm(std::size_t n) {
      std::vector<StateIndex> p(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<StateIndex>(i);
      }
      return p;
    }

    // Signed points: +i is i−1, −i is n+i−1.
    LocalFactor signed_factor(std::size_t n, bool type_d) {
      LocalFactor f;
      f.points = 2 * n;
      auto pos = [](std::size_t i) { return static_cast<StateIndex>(i - 1); };
      auto neg = [n](std::size_t i) { return static_cast<StateIndex>(n + i - 1); };
      auto first = identity_perm(f.points);
      if (type_d) {
        // 1 ↔ −2 and 2 ↔ −1.
        std::swap(first[pos(1)], first[neg(2)]);
        std::swap(first[pos(2)], first[neg(1)]);
      } else {
        std::swap(first[pos(1)], first[neg(1)]);
      }
      f.gens.push_back(first);
      for (std::size_t i = 1; i < n; ++i) {
        auto p = identity_perm(f.points);
        std::swap(p[pos(i)], p[pos(i + 1)]);
        std::swap(p[neg(i)], p[neg(i + 1)]);
        f.gens.push_back(p);
      }
      f.matrix.assign(n, std::vector<int>(n, 2));
      for (std::size_t i = 0; i < n; ++i) {
        f.matrix[i][i] = 1;
      }
      for (std::size_t i = 1; i + 1 < n; ++i) {
        f.matrix[i][i + 1] = f.matrix[i + 1][i] = 3;
      }
      if (type_d) {
        if (n >= 3) {
          f.matrix[0][2] = f.matrix[2][0] = 3;
        }
      } else if (n >= 2) {
        f.matrix[0][1] = f.matrix[1][0] = 4;
      }
      return f;
    }

    LocalFactor local_factor(CoxeterFactor const& c) {
      LocalFactor f;
      switch (c.type) {
        case CoxeterType::A: {
          f.points = c.n + 1;
          for (std::size_t i = 0; i < c.n; ++i) {
            auto p = identity_perm(f.points);
            std::swap(p[i], p[i + 1]);
            f.gens.push_back(p);
          }
          f.matrix.assign(c.n, std::vector<int>(c.n, 2));
          for (std::size_t i = 0; i < c.n; ++i) {
            f.matrix[i][i] = 1;
            if (i + 1 < c.n) {
              f.matrix[i][i + 1] = f.matrix[i + 1][i] = 3;
            }
          }
          return f;
        }
        case CoxeterType::B: return signed_factor(c.n, false);
        case CoxeterType::D: return signed_factor(c.n, true);
        case CoxeterType::I2: {
          std::size_t const q = 2 * c.n;
          f.points            = q;
          std::vector<StateIndex> s(q), t(q);
          for (std::size_t k = 0; k < q; ++k) {
            s[k] = static_cast<StateIndex>((q - k) % q);
            t[k] = static_cast<StateIndex>((q + 2 - k) % q);
          }
          f.gens   = {s, t};
          f.matrix = {{1, static_cast<int>(c.n)}, {static_cast<int>(c.n), 1}};
          return f;
        }
      }
      raise(ErrorKind::UnsupportedType, "unsupported Coxeter factor");
    }

    Integer group_order(std::vector<CoxeterFactor> const& factors) {
      Integer order = 1;
      for (auto const& f : factors) {
        switch (f.type) {
          case CoxeterType::A: order *= factorial(f.n + 1); break;
          case CoxeterType::B: order *= factorial(f.n) * (Integer(1) << static_cast<mp_bitcnt_t>(f.n)); break;
          case CoxeterType::D:
            order *= factorial(f.n) * (Integer(1) << static_cast<mp_bitcnt_t>(f.n - 1));
            break;
          case CoxeterType::I2: order *= 2 * f.n; break;
        }
      }
      return order;
    }

    std::vector<StateIndex> compose_perm(std::vector<StateIndex> const& f, std::vector<StateIndex> const& g) {
      std::vector<StateIndex> h(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        h[i] = f[g[i]];
      }
      return h;
    }
  }  // namespace

  std::vector<CoxeterFactor> parse_coxeter_spec(std::string const& text) {
    std::vector<CoxeterFactor> out;
    std::string                trimmed;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        trimmed += c;
      }
    }
    if (!trimmed.empty() && trimmed[0] == '{') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(trimmed);
        for (auto const& f : doc.at("factors")) {
          std::string type = f.at("type").get<std::string>();
          long long   n    = type == "I2" ? f.at("m").get<long long>() : f.at("n").get<long long>();
          out.push_back(make_factor(type, n));
        }
      } catch (nlohmann::json::exception const& e) {
        raise(ErrorKind::UnsupportedType, std::string("malformed Coxeter JSON: ") + e.what());
      }
    } else {
      std::size_t start = 0;
      while (start <= trimmed.size()) {
        std::size_t stop = trimmed.find('x', start);
        if (stop == std::string::npos) {
          stop = trimmed.size();
        }
        parse_token(trimmed.substr(start, stop - start), out);
        start = stop + 1;
      }
    }
    if (out.empty()) {
      raise(ErrorKind::UnsupportedType, "empty Coxeter specification");
    }
    return out;
  }

  std::string CoxeterSystem::label() const {
    std::string s;
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      s += (i ? "x" : "") + _factors[i].name();
    }
    return s;
  }

  SubsetMask CoxeterSystem::right_descents(GroupElement w) const {
    SubsetMask d = 0;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (length(right(w, s)) < length(w)) {
        d |= SubsetMask{1} << s;
      }
    }
    return d;
  }

  SubsetMask CoxeterSystem::left_descents(GroupElement w) const {
    SubsetMask d = 0;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (length(left(w, s)) < length(w)) {
        d |= SubsetMask{1} << s;
      }
    }
    return d;
  }

  Word CoxeterSystem::shortlex_word(GroupElement w) const {
    Word word;
    while (w != 0) {
      word.push_back(_last[w]);
      w = _parent[w];
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  GroupElement CoxeterSystem::evaluate(Word const& word) const {
    GroupElement w = 0;
    for (auto s : word) {
      if (s >= rank()) {
        raise(ErrorKind::InvalidInput, "generator index out of range");
      }
      w = right(w, s);
    }
    return w;
  }

  GroupElement CoxeterSystem::multiply(GroupElement a, GroupElement b) const {
    GroupElement w = a;
    for (auto s : shortlex_word(b)) {
      w = right(w, s);
    }
    return w;
  }

  GroupElement CoxeterSystem::inverse(GroupElement w) const {
    auto word = shortlex_word(w);
    std::reverse(word.begin(), word.end());
    return evaluate(word);
  }

  CoxeterSystem build_coxeter(std::vector<CoxeterFactor> const& factors, std::size_t cap) {
    if (factors.empty()) {
      raise(ErrorKind::UnsupportedType, "a Coxeter system needs at least one factor");
    }
    if (group_order(factors) > Integer(static_cast<unsigned long>(cap))) {
      raise(ErrorKind::CapExceeded, "Coxeter group larger than the cap of " + std::to_string(cap));
    }
    CoxeterSystem W;
    W._factors = factors;
    std::vector<LocalFactor> locals;
    std::size_t              points = 0, r = 0;
    for (auto const& f : factors) {
      locals.push_back(local_factor(f));
      points += locals.back().points;
      r += locals.back().gens.size();
    }
    if (r > 64) {
      raise(ErrorKind::UnsupportedType, "rank above 64 is not supported");
    }
    std::vector<std::vector<StateIndex>> gens;
    W._matrix.assign(r, std::vector<int>(r, 2));
    std::size_t offset = 0, base = 0;
    for (auto const& lf : locals) {
      for (std::size_t i = 0; i < lf.gens.size(); ++i) {
        auto p = identity_perm(points);
        for (std::size_t k = 0; k < lf.points; ++k) {
          p[offset + k] = static_cast<StateIndex>(offset + lf.gens[i][k]);
        }
        gens.push_back(p);
        for (std::size_t j = 0; j < lf.gens.size(); ++j) {
          W._matrix[base + i][base + j] = lf.matrix[i][j];
        }
      }
      offset += lf.points;
      base += lf.gens.size();
    }
    for (std::size_t i = 0; i < r; ++i) {
      W._names.push_back("s" + std::to_string(i + 1));
    }

    std::map<std::vector<StateIndex>, GroupElement> index;
    W._perm.push_back(identity_perm(points));
    W._length.push_back(0);
    W._parent.push_back(0);
    W._last.push_back(0);
    index[W._perm[0]] = 0;
    for (GroupElement w = 0; w < W._perm.size(); ++w) {
      for (std::size_t s = 0; s < r; ++s) {
        auto p  = compose_perm(W._perm[w], gens[s]);
        auto it = index.find(p);
        GroupElement id;
        if (it == index.end()) {
          if (W._perm.size() >= cap) {
            raise(ErrorKind::CapExceeded, "Coxeter group larger than the cap of " + std::to_string(cap));
          }
          id       = static_cast<GroupElement>(W._perm.size());
          index[p] = id;
          W._perm.push_back(std::move(p));
          W._length.push_back(W._length[w] + 1);
          W._parent.push_back(w);
          W._last.push_back(static_cast<std::uint32_t>(s));
        } else {
          id = it->second;
        }
        W._right.push_back(id);
      }
    }
    W._left.resize(W._right.size());
    for (GroupElement w = 0; w < W.size(); ++w) {
      for (std::size_t s = 0; s < r; ++s) {
        W._left[static_cast<std::size_t>(w) * r + s] = index.at(compose_perm(gens[s], W._perm[w]));
      }
    }

    if (Integer(static_cast<unsigned long>(W.size())) != group_order(factors)) {
      raise(ErrorKind::PreconditionViolated, "realization is not faithful");
    }
    for (GroupElement w = 0; w < W.size(); ++w) {
      for (std::size_t s = 0; s < r; ++s) {
        std::size_t a = W.length(w), b = W.length(W.right(w, s));
        if (a + 1 != b && b + 1 != a) {
          raise(ErrorKind::PreconditionViolated, "length is not ±1 under a generator");
        }
      }
    }
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t t = 0; t < r; ++t) {
        // Order of st must be exactly m(s, t).
        auto st = compose_perm(gens[s], gens[t]);
        auto p  = st;
        int  order = 1;
        while (p != W._perm[0]) {
          p = compose_perm(p, st);
          ++order;
        }
        if (order != W._matrix[s][t]) {
          raise(ErrorKind::PreconditionViolated, "braid relation order mismatch");
        }
      }
    }
    SubsetMask const full = r == 64 ? ~SubsetMask{0} : (SubsetMask{1} << r) - 1;
    std::size_t      tops = 0;
    for (GroupElement w = 0; w < W.size(); ++w) {
      if (W.right_descents(w) == full) {
        W._w0 = w;
        ++tops;
      }
    }
    if (tops != 1 || W.length(W._w0) != positive_root_count(factors)) {
      raise(ErrorKind::PreconditionViolated, "longest element check failed");
    }
    return W;
  }

  CoxeterSystem build_coxeter(std::string const& spec, std::size_t cap) {
    return build_coxeter(parse_coxeter_spec(spec), cap);
  }

  std::size_t positive_root_count(std::vector<CoxeterFactor> const& factors) {
    std::size_t n = 0;
    for (auto const& f : factors) {
      switch (f.type) {
        case CoxeterType::A: n += f.n * (f.n + 1) / 2; break;
        case CoxeterType::B: n += f.n * f.n; break;
        case CoxeterType::D: n += f.n * (f.n - 1); break;
        case CoxeterType::I2: n += f.n; break;
      }
    }
    return n;
  }

  bool is_reduced_word(CoxeterSystem const& W, Word const& word) {
    GroupElement w = 0;
    for (auto s : word) {
      if (s >= W.rank()) {
        return false;
      }
      GroupElement next = W.right(w, s);
      if (W.length(next) < W.length(w)) {
        return false;
      }
      w = next;
    }
    return true;
  }

  std::vector<Word> reduced_words(CoxeterSystem const& W, GroupElement w, std::size_t budget) {
    std::vector<Word> out;
    Word              suffix;
    // Peel right descents; suffix collects letters in reverse.
    std::function<void(GroupElement)> peel = [&](GroupElement v) {
      if (v == 0) {
        if (out.size() >= budget) {
          raise(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " reduced words");
        }
        out.emplace_back(suffix.rbegin(), suffix.rend());
        return;
      }
      for (std::size_t s = 0; s < W.rank(); ++s) {
        GroupElement u = W.right(v, s);
        if (W.length(u) < W.length(v)) {
          suffix.push_back(static_cast<std::uint32_t>(s));
          peel(u);
          suffix.pop_back();
        }
      }
    };
    peel(w);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Integer> reduced_word_counts(CoxeterSystem const& W) {
    std::vector<Integer> count(W.size(), Integer(0));
    count[0] = 1;
    // BFS order lists elements by nondecreasing length.
    for (GroupElement w = 1; w < W.size(); ++w) {
      for (std::size_t s = 0; s < W.rank(); ++s) {
        GroupElement u = W.right(w, s);
        if (W.length(u) < W.length(w)) {
          count[w] += count[u];
        }
      }
    }
    return count;
  }

  GroupElement longest_parabolic(CoxeterSystem const& W, SubsetMask J) {
    std::vector<bool>        seen(W.size(), false);
    std::deque<GroupElement> todo{0};
    seen[0]           = true;
    GroupElement best = 0;
    while (!todo.empty()) {
      GroupElement w = todo.front();
      todo.pop_front();
      if (W.length(w) > W.length(best)) {
        best = w;
      }
      for (std::size_t s = 0; s < W.rank(); ++s) {
        if (J >> s & 1) {
          GroupElement u = W.right(w, s);
          if (!seen[u]) {
            seen[u] = true;
            todo.push_back(u);
          }
        }
      }
    }
    return best;
  }

  Word exchange_op(CoxeterSystem const& W, std::size_t s, Word const& alpha) {
    if (s >= W.rank()) {
      raise(ErrorKind::InvalidInput, "generator index out of range");
    }
    if (!is_reduced_word(W, alpha) || W.evaluate(alpha) != W.longest()) {
      raise(ErrorKind::NotReducedForW0, "word is not a reduced expression of w0");
    }
    Word         out{static_cast<std::uint32_t>(s)};
    GroupElement cur     = W.right(0, s);
    bool         dropped = false;
    for (auto a : alpha) {
      GroupElement next = W.right(cur, a);
      if (!dropped && W.length(next) < W.length(cur)) {
        dropped = true;
        continue;
      }
      out.push_back(a);
      cur = next;
    }
    if (!dropped || W.length(cur) != out.size() || cur != W.longest()) {
      raise(ErrorKind::NotReducedForW0, "exchange did not produce a reduced word of w0");
    }
    return out;
  }

  Word descent_strip(CoxeterSystem const& W, Word const& word) {
    Word         out;
    GroupElement cur = 0;
    for (auto a : word) {
      GroupElement next = W.right(cur, a);
      if (W.length(next) > W.length(cur)) {
        out.push_back(a);
        cur = next;
      }
    }
    return out;
  }

  std::string reduced_word_label(CoxeterSystem const& W, Word const& word) {
    if (word.empty()) {
      return "e";
    }
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (W.rank() >= 10 && i > 0) {
        s += '.';
      }
      s += std::to_string(word[i] + 1);
    }
    return s;
  }

}  // namespace monowalk
