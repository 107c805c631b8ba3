#include "gasing/cli.h"

int main(int argc, char** argv) { return gasing::run(argc, argv); }
