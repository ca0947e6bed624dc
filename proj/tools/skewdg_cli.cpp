#include "skewdg/cli.hpp"

int main(int argc, char** argv) { return skewdg::run(argc, argv); }
