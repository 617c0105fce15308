#include "cli.hpp"

int main(int argc, char** argv)
{
    return basel::cli::run(argc, argv);
}
