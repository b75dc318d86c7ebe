from .students import STUDENT_ROWS, STUDENT_SCHEMA, load_embedded_students

__all__ = ["STUDENT_ROWS", "STUDENT_SCHEMA", "load_embedded_students"]
