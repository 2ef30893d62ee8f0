class EngineError(Exception):
    """Base class for every domain error raised by the engine."""
