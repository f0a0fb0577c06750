#include "monowalk/models/free_tree.hpp"

#include <algorithm>
#include <map>

#include "monowalk/error.hpp"

namespace monowalk::models {

  namespace {
    bool reduced_range(FtWord const& w, std::size_t lo, std::size_t hi) {
      if (lo >= hi) {
        return true;
      }
      auto const top   = *std::max_element(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                           w.begin() + static_cast<std::ptrdiff_t>(hi));
      std::size_t where = hi, count = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        if (w[i] == top) {
          where = i;
          ++count;
        }
      }
      return count == 1 && reduced_range(w, lo, where) && reduced_range(w, where + 1, hi);
    }

    void check_letters(FtWord const& word, std::size_t n) {
      for (auto x : word) {
        if (x < 1 || x > n) {
          raise(ErrorKind::InvalidInput, "letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
        }
      }
    }

    void to_dot(TreeShape const& t, std::string& out, std::size_t& next) {
      std::size_t const me = next++;
      out += "  n" + std::to_string(me) + " [label=\""
             + (t.kind == TreeShape::Kind::Leaf ? "leaf" : t.kind == TreeShape::Kind::Unary ? "U" : "B")
             + "\"];\n";
      for (auto const& c : t.children) {
        std::size_t const child = next;
        to_dot(c, out, next);
        out += "  n" + std::to_string(me) + " -> n" + std::to_string(child) + ";\n";
      }
    }
  }  // namespace

  Integer ft_count(std::size_t n) {
    Integer a = 1;
    for (std::size_t i = 0; i < n; ++i) {
      a = a * a + a;
    }
    return a;
  }

  bool ft_is_reduced(FtWord const& word) {
    return reduced_range(word, 0, word.size());
  }

  std::vector<std::pair<std::size_t, std::size_t>> ft_redexes(FtWord const& word) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::size_t j = i + 1;
      while (j < word.size() && word[j] < word[i]) {
        ++j;
      }
      if (j < word.size() && word[j] == word[i] && reduced_range(word, i + 1, j)) {
        out.emplace_back(i, j);
      }
    }
    return out;
  }

  FtWord ft_rewrite(FtWord const& word, std::size_t j) {
    FtWord w = word;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
    return w;
  }

  FtWord ft_reduce(FtWord const& word, std::size_t n) {
    check_letters(word, n);
    FtWord w = word;
    while (true) {
      auto r = ft_redexes(w);
      if (r.empty()) {
        return w;
      }
      w = ft_rewrite(w, r.front().second);
    }
  }

  std::vector<FtWord> ft_enumerate(std::size_t n) {
    if (n >= 5) {
      raise(ErrorKind::BudgetExceeded, "FT(n) enumeration is limited to n ≤ 4");
    }
    std::vector<FtWord> words{FtWord{}};
    for (std::uint32_t x = 1; x <= n; ++x) {
      std::vector<FtWord> next = words;
      for (auto const& u : words) {
        for (auto const& v : words) {
          FtWord w = u;
          w.push_back(x);
          w.insert(w.end(), v.begin(), v.end());
          next.push_back(std::move(w));
        }
      }
      words = std::move(next);
    }
    std::sort(words.begin(), words.end(), [](FtWord const& a, FtWord const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return words;
  }

  std::string ft_label(FtWord const& word) {
    if (word.empty()) {
      return "1";
    }
    std::string s;
    for (auto x : word) {
      s += "x" + std::to_string(x);
    }
    return s;
  }

  GeneratorSet free_tree_generators(std::size_t n) {
    if (n < 1) {
      raise(ErrorKind::InvalidInput, "free tree monoid needs n ≥ 1");
    }
    auto                     words = ft_enumerate(n);
    std::map<FtWord, StateIndex> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index.emplace(words[i], static_cast<StateIndex>(i));
      labels.push_back(ft_label(words[i]));
    }
    std::vector<Generator>   gens;
    std::vector<std::string> order;
    for (std::uint32_t x = 1; x <= n; ++x) {
      std::vector<StateIndex> targets(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        FtWord w{x};
        w.insert(w.end(), words[i].begin(), words[i].end());
        targets[i] = index.at(ft_reduce(w, n));
      }
      std::string name = "x" + std::to_string(x);
      order.push_back(name);
      gens.push_back({name, Transformation(std::move(targets))});
    }
    return GeneratorSet(StateSpace(std::move(labels)), std::move(gens), std::move(order));
  }

  std::size_t TreeShape::leaves() const {
    if (kind == Kind::Leaf) {
      return 1;
    }
    std::size_t s = 0;
    for (auto const& c : children) {
      s += c.leaves();
    }
    return s;
  }

  std::size_t TreeShape::height() const {
    return kind == Kind::Leaf ? 0 : 1 + children.front().height();
  }

  TreeShape ft_to_tree(FtWord const& word, std::size_t n) {
    check_letters(word, n);
    if (!ft_is_reduced(word)) {
      raise(ErrorKind::NotReduced, "word is not reduced in FT(" + std::to_string(n) + ")");
    }
    TreeShape t;
    if (n == 0) {
      return t;
    }
    auto it = std::find(word.begin(), word.end(), static_cast<std::uint32_t>(n));
    if (it == word.end()) {
      t.kind = TreeShape::Kind::Unary;
      t.children.push_back(ft_to_tree(word, n - 1));
    } else {
      t.kind = TreeShape::Kind::Binary;
      t.children.push_back(ft_to_tree(FtWord(word.begin(), it), n - 1));
      t.children.push_back(ft_to_tree(FtWord(it + 1, word.end()), n - 1));
    }
    return t;
  }

  FtWord ft_from_tree(TreeShape const& tree) {
    std::size_t const n = tree.height();
    switch (tree.kind) {
      case TreeShape::Kind::Leaf:
        if (!tree.children.empty()) {
          raise(ErrorKind::InvalidInput, "a leaf has no children");
        }
        return {};
      case TreeShape::Kind::Unary:
        if (tree.children.size() != 1) {
          raise(ErrorKind::InvalidInput, "a unary node has one child");
        }
        return ft_from_tree(tree.children[0]);
      case TreeShape::Kind::Binary: {
        if (tree.children.size() != 2 || tree.children[1].height() != n - 1) {
          raise(ErrorKind::InvalidInput, "a binary node has two children of equal height");
        }
        FtWord w = ft_from_tree(tree.children[0]);
        w.push_back(static_cast<std::uint32_t>(n));
        auto v = ft_from_tree(tree.children[1]);
        w.insert(w.end(), v.begin(), v.end());
        return w;
      }
    }
    return {};
  }

  std::string tree_bracket(TreeShape const& tree) {
    switch (tree.kind) {
      case TreeShape::Kind::Leaf: return "*";
      case TreeShape::Kind::Unary: return "U(" + tree_bracket(tree.children[0]) + ")";
      case TreeShape::Kind::Binary:
        return "B(" + tree_bracket(tree.children[0]) + "," + tree_bracket(tree.children[1]) + ")";
    }
    return "";
  }

  std::string tree_dot(TreeShape const& tree, std::string const& name) {
    std::string out  = "digraph " + name + " {\n";
    std::size_t next = 0;
    to_dot(tree, out, next);
    return out + "}\n";
  }

  FtDescents ft_descents(FtWord const& word, std::size_t n) {
    check_letters(word, n);
    if (!ft_is_reduced(word)) {
      raise(ErrorKind::NotReduced, "word is not reduced in FT(" + std::to_string(n) + ")");
    }
    FtDescents d;
    if (word.empty()) {
      return d;
    }
    d.left = std::uint64_t{1} << (word.front() - 1);
    // Scanning suffixes from the right, x_i qualifies when it exceeds every
    // letter after it.
    std::uint32_t suffix_max = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (*it > suffix_max) {
        d.right |= std::uint64_t{1} << (*it - 1);
        suffix_max = *it;
      }
    }
    return d;
  }

  Integer ft_descent_class_size(std::uint64_t I, std::size_t n) {
    Integer size = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      if (I >> (i - 1) & 1) {
        size *= ft_count(i - 1);
      }
    }
    return size;
  }

}  // namespace monowalk::models
