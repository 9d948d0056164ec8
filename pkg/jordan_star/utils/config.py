from dotenv import load_dotenv
import os

load_dotenv()

# === Defaults (every variable is optional) ===
DEFAULT_MU = os.getenv("JORDAN_STAR_DEFAULT_MU", "1")
LOG_LEVEL = os.getenv("JORDAN_STAR_LOG_LEVEL", "INFO")
REPORT_DIR = os.getenv("JORDAN_STAR_REPORT_DIR", "reports")
CACHE_SIZE = int(os.getenv("JORDAN_STAR_CACHE_SIZE", "16"))
SEED = int(os.getenv("JORDAN_STAR_SEED", "20240229"))
ASSOC_TRIALS = int(os.getenv("JORDAN_STAR_ASSOC_TRIALS", "20"))
