from typing import Dict, List
from modules.asymptotics.objects.expectation_row import ExpectationRow
from modules.asymptotics.objects.singularity_report import SingularityReport
from modules.util.data.table_data import TableData


class AsymptoticsData:
    """ Export layer for singularity reports and expectation tables
    """
    COLUMNS = ["n", "E", "log4n", "ratio", "difference"]

    def __init__(self, **kwargs):
        """ Constructor for AsymptoticsData
        Args:
            **kwargs:           Dependencies
                table_data (TableData)      - Table rendering
        """
        self.__table_data: TableData = kwargs.get("table_data")

    @classmethod
    def expectation_rows(cls, rows: List[ExpectationRow]) -> List[Dict[str, any]]:
        return [row.get_dict() for row in rows]

    def expectation_csv(self, rows: List[ExpectationRow]) -> str:
        return self.__table_data.render_rows(self.expectation_rows(rows), "csv", self.COLUMNS)

    def report_json(self, report: SingularityReport) -> str:
        return self.__table_data.render_record(report.get_dict(), "json")
