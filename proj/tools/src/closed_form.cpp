#include "monowalk/exchange.hpp"
#include "monowalk/models/toom.hpp"
#include "monowalk_cli/cli.hpp"

namespace monowalk::cli {

  namespace {
    std::vector<std::vector<Rational>> nest(std::vector<std::uint32_t> const& counts,
                                            std::vector<Rational> const&      flat) {
      std::vector<std::vector<Rational>> out;
      std::size_t                        at = 0;
      for (auto c : counts) {
        out.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(at),
                         flat.begin() + static_cast<std::ptrdiff_t>(at + c));
        at += c;
      }
      return out;
    }

    std::string toom_symbol(models::SubsetTuple const& R) {
      std::string out;
      for (std::size_t b = 0; b < R.size(); ++b) {
        for (auto j : R[b]) {
          out += (out.empty() ? "x" : "+x") + std::to_string(b + 1) + std::to_string(j);
        }
      }
      return out.empty() ? "0" : out;
    }

    ClosedSpectrum from_toom(std::string source, models::ToomSpectrum const& S) {
      ClosedSpectrum out{std::move(source), {}, {}, S.omega_size};
      for (auto const& e : S.entries) {
        out.entries.push_back({e.mask, e.lambda, e.multiplicity});
        out.symbols.push_back(toom_symbol(e.R));
      }
      return out;
    }
  }  // namespace

  std::optional<ClosedSpectrum> closed_spectrum(Context const& ctx) {
    for (auto const& w : ctx.weights) {
      if (sgn(w) <= 0) {
        return std::nullopt;
      }
    }
    auto const& name = ctx.instance.model;
    auto const& p    = ctx.instance.params;
    if (name == "toom-fixed" || name == "tsetlin") {
      // Tsetlin is the fixed-content library with one copy of each book.
      std::vector<std::uint32_t> content =
          name == "tsetlin" ? std::vector<std::uint32_t>(ctx.weights.size(), 1u) : models::parse_uint_list(p.at("content"));
      models::ToomFixedSpec spec{content, nest(content, ctx.weights)};
      auto out = from_toom(name, models::toom_fixed_spectrum(spec));
      if (name == "tsetlin") {
        for (std::size_t i = 0; i < out.entries.size(); ++i) {
          std::string sym;
          for (std::size_t g = 0; g < ctx.weights.size(); ++g) {
            if (out.entries[i].generators >> g & 1) {
              sym += (sym.empty() ? "p(" : "+p(") + ctx.instance.monoid[g].name + ")";
            }
          }
          out.symbols[i] = sym.empty() ? "0" : sym;
        }
      }
      return out;
    }
    if (name == "toom-loan") {
      models::ToomLoanSpec spec;
      spec.m = static_cast<std::uint32_t>(std::stoul(p.at("m")));
      spec.L = static_cast<std::uint32_t>(std::stoul(p.at("L")));
      spec.weights = nest(std::vector<std::uint32_t>(spec.m, spec.L), ctx.weights);
      return from_toom(name, models::toom_loan_spectrum(spec));
    }
    if (name == "exchange-walk" && ctx.instance.coxeter) {
      auto           chain = make_exchange_chain(*ctx.instance.coxeter, ctx.weights);
      auto           S     = exchange_spectrum(chain);
      ClosedSpectrum out{name, {}, {}, S.omega_size};
      auto const&    names = chain.W.generator_names();
      for (auto const& e : S.entries) {
        out.entries.push_back({e.J, e.lambda, e.multiplicity});
        std::string sym;
        for (std::size_t s = 0; s < names.size(); ++s) {
          if (e.J >> s & 1) {
            sym += (sym.empty() ? "p(" : "+p(") + names[s] + ")";
          }
        }
        out.symbols.push_back(sym.empty() ? "0" : sym);
      }
      return out;
    }
    return std::nullopt;
  }

}  // namespace monowalk::cli
