#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

using namespace wreathlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"wreathlab: wreath products and embeddings of finite groups"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  std::optional<std::uint64_t> size_cap;
  app.add_option("--size-cap", size_cap, "Element cap for constructed groups (overrides WREATHLAB_SIZE_CAP)");

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build K wr_Omega H and identify it");
  b->add_option("--k", build.k, "Base group spec")->required();
  b->add_option("--h", build.h, "Top group spec")->required();
  b->add_option("--omega", build.omega, "regular | natural:n | cosets:<subgroup> | file:<path>");
  b->add_option("--out", build.out, "Write the product as group JSON");
  b->add_option("--format", build.format, "text | json");

  EmbedOptions embed;
  auto* e = app.add_subcommand("embed", "Construct and verify an embedding");
  e->add_option("--mode", embed.mode, "kk | omega | tower")->required();
  e->add_option("--group", embed.group, "Group spec");
  e->add_option("--normal", embed.normal, "Normal subgroup spec (kk)");
  e->add_option("--subgroup", embed.subgroup, "Subgroup spec (omega)");
  e->add_option("--field", embed.field, "Generators of L, e.g. 5,7 (tower)");
  e->add_option("--K", embed.k_generators, "Generators of K, e.g. 5 (tower)");
  e->add_option("--alpha", embed.alpha, "Radicand with L = K(sqrt alpha) (tower)");
  e->add_option("--section", embed.section, "Section overrides q:g,... by label");
  e->add_option("--format", embed.format, "text | json");

  SizesOptions sizes;
  auto* s = app.add_subcommand("sizes", "Size formulas, table rows and figure data");
  s->add_option("--emit", sizes.emit, "figure | table1 | crossover | degree432");
  s->add_option("--kf", sizes.kf, "[K:F] in 2..5");
  s->add_option("--group", sizes.group, "Group name, e.g. S3");
  s->add_option("--m-max", sizes.m_max, "Largest m");
  s->add_option("--format", sizes.format, "csv | json | text");
  s->add_option("--out", sizes.out, "Output file");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run property suites");
  v->add_option("--suite", verify.suite, "all | theta | kk | omega | cocycle | iso | group");
  v->add_option("--depth", verify.depth, "exhaustive | sampled:n");
  v->add_option("--seed", verify.seed, "Seed for sampled runs");
  v->add_option("--group-file", verify.group_file, "Group JSON to check as well");
  v->add_option("--format", verify.format, "json | text");

  IdentifyOptions identify;
  auto* i = app.add_subcommand("identify", "Order and small-group name");
  i->add_option("--group", identify.group, "Group spec")->required();
  i->add_option("--format", identify.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  return guarded(
      [&] {
        const auto cap = resolve_size_cap(size_cap);
        build.size_cap = cap;
        embed.size_cap = cap;
        if (b->parsed()) return cmd_build(build, std::cout);
        if (e->parsed()) return cmd_embed(embed, std::cout);
        if (s->parsed()) return cmd_sizes(sizes, std::cout);
        if (v->parsed()) return cmd_verify(verify, std::cout);
        return cmd_identify(identify, std::cout);
      },
      std::cerr);
}
