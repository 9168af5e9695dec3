import logging
import sys

from src.modules.verify.commands import main
from src.shared.config import config

# Reports go to stdout; logging stays on stderr.
logging.basicConfig(
    level=getattr(logging, config.LOG_LEVEL),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)

if __name__ == "__main__":
    sys.exit(main())
