import csv
import io
import json
from fractions import Fraction
from typing import Dict, List
import mpmath

FORMATS = ("text", "json", "csv")


class TableData:
    """ Export layer rendering rows and records as text, JSON or CSV
    """
    SIGNIFICANT_DIGITS = 12

    def render_rows(self, rows: List[Dict[str, any]], output_format: str, columns: List[str] = None) -> str:
        """ Render table rows
        Args:
            rows (List[Dict[str, any]]):    Rows keyed by column
            output_format (str):            One of text, json, csv
            columns (List[str]):            Column order, keys of the first row when omitted
        Returns:
            str
        """
        columns = columns or (list(rows[0].keys()) if rows else [])
        if output_format == "json":
            return json.dumps([
                {column: self.__json_value(row.get(column)) for column in columns} for row in rows
            ]) + "\n"
        if output_format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([self.render_value(row.get(column)) for column in columns])
            return buffer.getvalue()
        return "".join(self.__text_line(row, columns) + "\n" for row in rows)

    def render_record(self, record: Dict[str, any], output_format: str) -> str:
        """ Render a single record
        Args:
            record (Dict[str, any]):
            output_format (str):
        Returns:
            str
        """
        if output_format == "json":
            return json.dumps({key: self.__json_value(value) for key, value in record.items()}) + "\n"
        return self.render_rows([record], output_format)

    def render_value(self, value: any) -> str:
        """ Render a single value; exact integers keep every digit
        Args:
            value (any):
        Returns:
            str
        """
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, int):
            return str(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return str(value.numerator)
            with mpmath.workdps(self.SIGNIFICANT_DIGITS + 10):
                return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, self.SIGNIFICANT_DIGITS)
        if isinstance(value, (float, mpmath.mpf)):
            return mpmath.nstr(mpmath.mpf(value), self.SIGNIFICANT_DIGITS)
        if isinstance(value, (list, tuple)):
            return "[" + ",".join(self.__item(item) for item in value) + "]"
        if isinstance(value, dict):
            return "{" + ",".join(f"{key}:{self.render_value(item)}" for key, item in value.items()) + "}"
        return str(value)

    def __item(self, item: any) -> str:
        if isinstance(item, tuple):
            return "(" + ",".join(self.render_value(part) for part in item) + ")"
        return self.render_value(item)

    def __text_line(self, row: Dict[str, any], columns: List[str]) -> str:
        if len(columns) == 1:
            return self.render_value(row.get(columns[0]))
        return " ".join(f"{column}={self.render_value(row.get(column))}" for column in columns)

    def __json_value(self, value: any) -> any:
        if value is None or isinstance(value, (bool, int, str)):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        if isinstance(value, dict):
            return {str(key): self.__json_value(item) for key, item in value.items()}
        if isinstance(value, (list, tuple)):
            return [self.__json_value(item) for item in value]
        return self.render_value(value)
