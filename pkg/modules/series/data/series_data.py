import json
from typing import Dict, List
from modules.series.objects.series import Series
from modules.util.data.table_data import TableData


class SeriesData:
    """ Export layer for series coefficients
    """
    COLUMNS = ["n", "coefficient"]

    def __init__(self, **kwargs):
        """ Constructor for SeriesData
        Args:
            **kwargs:           Dependencies
                table_data (TableData)          - Row renderer
        """
        self.__table_data: TableData = kwargs.get("table_data") or TableData()

    @classmethod
    def rows(cls, series: Series, low: int = 0, high: int = None) -> List[Dict[str, any]]:
        """ Get rows (n, coefficient)
        Args:
            series (Series):
            low (int):          First exponent
            high (int):         Last exponent, N when omitted
        Returns:
            List[Dict[str, any]]
        """
        high = series.get_truncation() if high is None else min(high, series.get_truncation())
        return [{"n": n, "coefficient": series.get_coefficient(n)} for n in range(low, high + 1)]

    def to_csv(self, series: Series, low: int = 0, high: int = None) -> str:
        """ CSV with columns n, coefficient
        Args:
            series (Series):
            low (int):          First exponent
            high (int):         Last exponent, N when omitted
        Returns:
            str
        """
        return self.__table_data.render_rows(self.rows(series, low, high), "csv", self.COLUMNS)

    @classmethod
    def to_json(cls, series: Series, low: int = 0, high: int = None) -> str:
        """ JSON array of decimal strings, element k holding [z^(low + k)]
        Args:
            series (Series):
            low (int):          First exponent
            high (int):         Last exponent, N when omitted
        Returns:
            str
        """
        return json.dumps([str(row["coefficient"]) for row in cls.rows(series, low, high)]) + "\n"

    def render(self, series: Series, output_format: str, low: int = 0, high: int = None) -> str:
        """ Render coefficients in one of text, json, csv
        Args:
            series (Series):
            output_format (str):
            low (int):          First exponent
            high (int):         Last exponent, N when omitted
        Returns:
            str
        """
        if output_format == "json":
            return self.to_json(series, low, high)
        if output_format == "csv":
            return self.to_csv(series, low, high)
        return self.__table_data.render_rows(self.rows(series, low, high), output_format, self.COLUMNS)
