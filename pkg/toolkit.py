import os
import sys
import logging

from config import DEFAULT_LOG_LEVEL_ENV
from cli import main


# Setup logging
logging.basicConfig(
    level=os.environ.get(DEFAULT_LOG_LEVEL_ENV, "INFO").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)


if __name__ == "__main__":
    sys.exit(main())
