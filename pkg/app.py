from __future__ import annotations

import sys

from distinguon.cli import dispatch


def main() -> None:
	# Example: python app.py distribution --model ideal --unitary Data/beamsplitter.json --input "1,1" --out dist.json
	sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
	main()
