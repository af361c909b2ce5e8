from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.util.data.table_data import TableData


class TableDataFactory(FactoryInterface):
    """ Factory for creating table data writer
    """
    def invoke(self, service_manager):
        return TableData()
