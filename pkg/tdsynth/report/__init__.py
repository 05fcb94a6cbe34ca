from .export import to_csv, to_json, write_csv, write_json

__all__ = ["to_csv", "to_json", "write_csv", "write_json"]
