from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.asymptotics.data.asymptotics_data import AsymptoticsData
from modules.util.data.table_data import TableData


class AsymptoticsDataFactory(FactoryInterface):
    """ Factory for creating asymptotics data object
    """
    def invoke(self, service_manager):
        return AsymptoticsData(
            table_data=service_manager.get(TableData.__name__)
        )
