// Writes the bundled extraction trees to the directory given as argv[1].
#include <fstream>
#include <iostream>

#include "pittslab/connective.hpp"
#include "pittslab/json_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: pittslab-make-trees <dir>\n";
    return 2;
  }
  for (const auto& ex : pittslab::extractionExamples()) {
    pittslab::Json j;
    j["body"] = pittslab::print(ex.connective.body);
    j["var"] = ex.connective.boundVar;
    j["tree"] = pittslab::toJson(ex.proof);
    std::ofstream(std::string(argv[1]) + "/" + ex.name + ".json") << j.dump(2) << "\n";
  }
}
