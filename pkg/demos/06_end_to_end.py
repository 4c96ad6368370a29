# The whole pipeline at desk scale: build, prune, recount, check.
#
# The published parameters need graphs with billions of vertices, so the desk
# presets keep the alphabets but shrink the pattern set and p.

from sqfree.cli import main

for name in ("six", "quaternary", "ternary"):
    print(f"== {name} (desk)")
    code = main(["prove", "--preset", name, "--scale", "desk"])
    print("exit code", code)

# at paper scale a vertex budget stops the run and says so
main(["prove", "--preset", "ternary", "--max-nodes", "2000"])
