from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.series.data.series_data import SeriesData
from modules.util.data.table_data import TableData


class SeriesDataFactory(FactoryInterface):
    """ Factory for creating series data object
    """
    def invoke(self, service_manager):
        return SeriesData(
            table_data=service_manager.get(TableData.__name__)
        )
