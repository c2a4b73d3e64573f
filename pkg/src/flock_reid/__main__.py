"""Entry point for running flock_reid as a module: python -m flock_reid"""

from .cli import main

if __name__ == "__main__":
    main()
