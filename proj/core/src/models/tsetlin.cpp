#include "monowalk/models/tsetlin.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "monowalk/error.hpp"

namespace monowalk::models {

  namespace {
    std::string letter(std::size_t i) {
      return std::string(1, static_cast<char>('a' + i));
    }

    std::string word_name(std::string const& w) {
      return w.empty() ? "1" : w;
    }

    // Left action of letter x on a word under per-letter caps.
    std::string push_front(std::string const& w, char x, std::size_t cap) {
      std::string out = std::string(1, x) + w;
      if (static_cast<std::size_t>(std::count(out.begin(), out.end(), x)) > cap) {
        out.erase(out.find_last_of(x), 1);
      }
      return out;
    }

    GeneratorSet left_action(std::vector<std::string> const& words, std::vector<std::size_t> const& caps) {
      std::map<std::string, StateIndex> index;
      std::vector<std::string>          labels;
      for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(words[i], static_cast<StateIndex>(i));
        labels.push_back(word_name(words[i]));
      }
      std::vector<Generator> gens;
      for (std::size_t x = 0; x < caps.size(); ++x) {
        std::vector<StateIndex> targets(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
          targets[i] = index.at(push_front(words[i], static_cast<char>('a' + x), caps[x]));
        }
        gens.push_back({letter(x), Transformation(std::move(targets))});
      }
      return GeneratorSet(StateSpace(std::move(labels)), std::move(gens));
    }

    // All words with at most caps[i] copies of letter i, shortlex.
    std::vector<std::string> capped_words(std::vector<std::size_t> const& caps) {
      constexpr std::size_t    max_words = 20000;
    std::vector<std::string> out{""};
      for (std::size_t start = 0; start < out.size(); ++start) {
        std::string const w = out[start];
        for (std::size_t x = 0; x < caps.size(); ++x) {
          char const c = static_cast<char>('a' + x);
          if (static_cast<std::size_t>(std::count(w.begin(), w.end(), c)) < caps[x]) {
            out.push_back(w + c);
            if (out.size() > max_words) {
              raise(ErrorKind::BudgetExceeded, "more than " + std::to_string(max_words) + " capped words");
            }
          }
        }
      }
      std::stable_sort(out.begin(), out.end(), [](std::string const& a, std::string const& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      return out;
    }
  }  // namespace

  GeneratorSet tsetlin_generators(std::size_t k) {
    if (k < 1 || k > 8) {
      raise(ErrorKind::InvalidInput, "Tsetlin library needs 1 ≤ k ≤ 8 books");
    }
    std::string shelf;
    for (std::size_t i = 0; i < k; ++i) {
      shelf += static_cast<char>('a' + i);
    }
    std::vector<std::string> perms;
    do {
      perms.push_back(shelf);
    } while (std::next_permutation(shelf.begin(), shelf.end()));
    return left_action(perms, std::vector<std::size_t>(k, 1));
  }

  GeneratorSet free_lrb_generators(std::size_t k) {
    if (k < 1 || k > 6) {
      raise(ErrorKind::InvalidInput, "free left regular band needs 1 ≤ k ≤ 6 letters");
    }
    std::vector<std::size_t> caps(k, 1);
    return left_action(capped_words(caps), caps);
  }

  GeneratorSet promotion_generators(std::vector<std::uint32_t> const& copies) {
    if (copies.empty() || copies.size() > 8) {
      raise(ErrorKind::InvalidInput, "promotion model needs 1 to 8 letters");
    }
    std::vector<std::size_t> caps;
    for (auto j : copies) {
      if (j < 1) {
        raise(ErrorKind::InvalidInput, "every letter needs at least one copy");
      }
      caps.push_back(j);
    }
    return left_action(capped_words(caps), caps);
  }

}  // namespace monowalk::models
