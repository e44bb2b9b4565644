// Regenerates data/omega/<name>.json from the cohomology engine.
#include <fstream>
#include <iostream>

#include "gxb/io.hpp"

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: make_omega_fixtures <out-dir> <group>...\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (int i = 2; i < argc; ++i) {
        auto g = gxb::share(gxb::builtin_group(argv[i]));
        auto fixture = gxb::compute_omega_fixture(g);
        std::ofstream(dir / (std::string(argv[i]) + ".json")) << gxb::omega_fixture_to_json(fixture).dump(1) << '\n';
        std::cout << argv[i] << ": " << fixture.representatives.size() << " representatives\n";
    }
    return 0;
}
