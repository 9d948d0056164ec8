class JordanStarError(Exception):
    """Base class for every error raised by jordan_star."""
