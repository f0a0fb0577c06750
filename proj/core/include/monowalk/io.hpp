#ifndef MONOWALK_IO_HPP_
#define MONOWALK_IO_HPP_

#include <string>

#include "monowalk/transformation.hpp"

namespace monowalk {

  // {"states": [labels], "generators": [{"name": str, "targets": [ints]}],
  //  "tree_order": [names]?}.  Throws InvalidInput on malformed documents.
  GeneratorSet parse_generator_set(std::string const& json_text);
  GeneratorSet read_generator_set(std::string const& path);

  std::string generator_set_to_json(GeneratorSet const& gens);

}  // namespace monowalk

#endif  // MONOWALK_IO_HPP_
