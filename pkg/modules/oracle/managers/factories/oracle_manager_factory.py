from sk88_service_locator.modules.service.interfaces.factory_interface import FactoryInterface
from modules.oracle.managers.oracle_manager import OracleManager
from modules.structure.managers.order_manager import OrderManager
from modules.structure.managers.structure_manager import StructureManager
from modules.util.objects.settings import Settings


class OracleManagerFactory(FactoryInterface):
    """ Factory for creating oracle manager object
    """
    def invoke(self, service_manager):
        settings: Settings = service_manager.get(Settings.__name__)
        return OracleManager(
            structure_manager=service_manager.get(StructureManager.__name__),
            order_manager=service_manager.get(OrderManager.__name__),
            cutoff=settings.get_oracle_cutoff(),
            census_cutoff=settings.get_census_cutoff()
        )
