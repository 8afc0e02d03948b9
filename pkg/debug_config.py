#!/usr/bin/env python3
"""Print the settings proxlaw would run with, optionally after loading an env file."""

import argparse
import os
import sys
from pathlib import Path

src_path = os.path.abspath(os.path.join(os.path.dirname(__file__), 'src'))
if src_path not in sys.path:
    sys.path.insert(0, src_path)

from dotenv import load_dotenv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--env-file", type=Path, default=Path(__file__).parent / ".env.test",
                        help="Env file loaded before settings resolve (default .env.test)")
    parser.add_argument("--no-env-file", action="store_true")
    args = parser.parse_args()

    if not args.no_env_file:
        if args.env_file.exists():
            load_dotenv(dotenv_path=args.env_file, override=True)
            print(f"Loaded environment from: {args.env_file}")
        else:
            print(f"Warning: {args.env_file} not found")

    from config import get_settings

    settings = get_settings()
    print(settings.model_dump_json(indent=2))
    if settings.source_date_epoch is not None:
        print(f"Timestamps pinned to {settings.now_utc().isoformat()}")

    overrides = sorted(key for key in os.environ if key.startswith("PROXLAW_") or key == "SOURCE_DATE_EPOCH")
    print("\nOverrides from environment:")
    for key in overrides:
        print(f"  {key} = {os.environ[key]}")


if __name__ == "__main__":
    main()
